#include "antsched/milp.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "antsched/error.hpp"

namespace antsched {

int VariableSpace::find(VarKind kind, int vp, int t) const {
  const std::vector<std::unordered_map<int, int>>* family = nullptr;
  switch (kind) {
    case VarKind::track: family = &track_of; break;
    case VarKind::start: family = &start_of; break;
    case VarKind::end: family = &end_of; break;
    case VarKind::setup_occ: family = &setup_of; break;
    case VarKind::teardown_occ: family = &teardown_of; break;
    case VarKind::activity: return vp >= 0 && vp < static_cast<int>(x_of.size()) ? x_of[vp] : -1;
  }
  if (vp < 0 || vp >= static_cast<int>(family->size())) return -1;
  auto it = (*family)[vp].find(t);
  return it == (*family)[vp].end() ? -1 : it->second;
}

std::string VariableSpace::name(int var) const {
  const VarInfo& info = vars.at(var);
  switch (info.kind) {
    case VarKind::activity: return "x_a" + std::to_string(info.activity);
    case VarKind::track: return "X_v" + std::to_string(info.vp) + "_t" + std::to_string(info.t);
    case VarKind::start: return "Xu_v" + std::to_string(info.vp) + "_t" + std::to_string(info.t);
    case VarKind::end: return "Xd_v" + std::to_string(info.vp) + "_t" + std::to_string(info.t);
    case VarKind::setup_occ: return "Yu_v" + std::to_string(info.vp) + "_t" + std::to_string(info.t);
    case VarKind::teardown_occ:
      return "Yd_v" + std::to_string(info.vp) + "_t" + std::to_string(info.t);
  }
  return "v" + std::to_string(var);
}

const char* tag_name(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::c2b: return "2b";
    case ConstraintTag::c2c: return "2c";
    case ConstraintTag::c2d: return "2d";
    case ConstraintTag::c2e: return "2e";
    case ConstraintTag::c2f: return "2f";
    case ConstraintTag::c2g: return "2g";
    case ConstraintTag::c2h: return "2h";
    case ConstraintTag::c2i_min: return "2i_min";
    case ConstraintTag::c2i_max: return "2i_max";
    case ConstraintTag::c2j: return "2j";
    case ConstraintTag::c2k: return "2k";
    case ConstraintTag::c2l: return "2l";
    case ConstraintTag::c2m: return "2m";
    case ConstraintTag::single_interval: return "single_interval";
  }
  return "?";
}

long ModelCounts::rows_for(const std::string& tag) const {
  for (const auto& [name, count] : rows_by_tag)
    if (name == tag) return count;
  return 0;
}

Weights uniform_weights(const ProblemInstance& instance) {
  Weights w;
  w.c1 = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(instance.activities.size()));
  w.c2 = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(instance.view_periods.size()));
  return w;
}

namespace {

// Per view period: usable-slot mask and the setup/teardown/min-up/min-down
// durations inherited from the owning activity.
struct VpContext {
  std::vector<char> usable;  // V[v,t]
  int delta_up = 0;
  int delta_down = 0;
  int gamma_up = 0;
  int gamma_down = 0;
};

std::vector<VpContext> vp_contexts(const ProblemInstance& instance) {
  const int horizon = instance.horizon();
  std::vector<VpContext> ctx(instance.view_periods.size());
  for (size_t v = 0; v < instance.view_periods.size(); ++v) {
    const ViewPeriod& vp = instance.view_periods[v];
    const Activity& owner = instance.activities[instance.vp_owner[v]];
    VpContext& c = ctx[v];
    c.delta_up = owner.setup_slots;
    c.delta_down = owner.teardown_slots;
    c.gamma_up = owner.min_up_slots;
    c.gamma_down = owner.min_down_slots;
    c.usable.assign(horizon, 0);
    for (const Interval& w : vp.windows) {
      for (int t = w.start; t < w.end; ++t) {
        bool blocked = false;
        for (const std::string& rid : vp.resource_ids)
          if (instance.resource(rid).in_maintenance(t)) {
            blocked = true;
            break;
          }
        if (!blocked) c.usable[t] = 1;
      }
    }
  }
  return ctx;
}

}  // namespace

MilpModel build_model(const ExpandedInstance& expanded, const Weights& weights,
                      const ModelOptions& options) {
  const ProblemInstance& inst = expanded.instance;
  const int n_a = static_cast<int>(inst.activities.size());
  const int n_v = static_cast<int>(inst.view_periods.size());
  const int horizon = inst.horizon();

  if (weights.c1.size() != n_a || weights.c2.size() != n_v)
    fail(ErrorKind::model, "weight dimensions (" + std::to_string(weights.c1.size()) + ", " +
                               std::to_string(weights.c2.size()) + ") do not match instance (" +
                               std::to_string(n_a) + " activities, " + std::to_string(n_v) +
                               " view periods)");
  for (ConstraintTag tag : options.ablated)
    if (tag != ConstraintTag::c2j && tag != ConstraintTag::c2k && tag != ConstraintTag::c2l &&
        tag != ConstraintTag::c2m)
      fail(ErrorKind::model, std::string("constraint family ") + tag_name(tag) + " cannot be ablated");

  MilpModel model;
  model.horizon = horizon;
  const std::vector<VpContext> ctx = vp_contexts(inst);

  for (const Activity& a : inst.activities) {
    ActivityMeta meta;
    meta.id = a.id;
    meta.mission_id = a.mission_id;
    if (auto it = expanded.registry.by_clone.find(a.id); it != expanded.registry.by_clone.end())
      meta.parent_id = expanded.registry.triples[it->second].parent_id;
    meta.d_min_slots = a.d_min_slots;
    meta.d_max_slots = a.d_max_slots;
    model.activities.push_back(std::move(meta));
  }
  for (int v = 0; v < n_v; ++v) {
    const ViewPeriod& vp = inst.view_periods[v];
    model.vps.push_back({vp.id, inst.vp_owner[v], vp.resource_ids, ctx[v].delta_up, ctx[v].delta_down});
  }

  // Variables. x first, then the (v,t) families per view period in slot order.
  VariableSpace& vs = model.vars;
  vs.x_of.resize(n_a);
  vs.track_of.resize(n_v);
  vs.start_of.resize(n_v);
  vs.end_of.resize(n_v);
  vs.setup_of.resize(n_v);
  vs.teardown_of.resize(n_v);
  auto add_var = [&vs](VarKind kind, int vp, int t, int activity) {
    vs.vars.push_back({kind, vp, t, activity});
    return static_cast<int>(vs.vars.size()) - 1;
  };
  for (int a = 0; a < n_a; ++a) vs.x_of[a] = add_var(VarKind::activity, -1, -1, a);
  for (int v = 0; v < n_v; ++v) {
    const VpContext& c = ctx[v];
    // Tracking in slot t needs an in-horizon end marker: with a nonzero
    // teardown the last usable slot is horizon-1-delta_down; with zero
    // teardown a run may end exactly at the horizon without a marker.
    for (int t = 0; t < horizon; ++t)
      if (c.usable[t] && t <= horizon - 1 - c.delta_down)
        vs.track_of[v].emplace(t, add_var(VarKind::track, v, t, -1));
    // A start needs its full setup inside the horizon.
    for (int t = c.delta_up; t < horizon; ++t)
      if (vs.track_of[v].contains(t)) vs.start_of[v].emplace(t, add_var(VarKind::start, v, t, -1));
    for (int t = 1; t < horizon; ++t)
      if (vs.track_of[v].contains(t - 1)) vs.end_of[v].emplace(t, add_var(VarKind::end, v, t, -1));
    for (int t = 0; t < horizon; ++t) {
      bool reachable = false;
      for (int tau = t + 1; tau <= t + c.delta_up && !reachable; ++tau)
        reachable = vs.start_of[v].contains(tau);
      if (reachable) vs.setup_of[v].emplace(t, add_var(VarKind::setup_occ, v, t, -1));
    }
    for (int t = 0; t < horizon; ++t) {
      bool reachable = false;
      for (int tau = t - c.delta_down + 1; tau <= t && !reachable; ++tau)
        reachable = vs.end_of[v].contains(tau);
      if (reachable) vs.teardown_of[v].emplace(t, add_var(VarKind::teardown_occ, v, t, -1));
    }
  }

  model.objective = Eigen::VectorXd::Zero(vs.size());
  for (int a = 0; a < n_a; ++a) model.objective[vs.x_of[a]] = weights.c1[a];
  for (int v = 0; v < n_v; ++v)
    for (const auto& [t, var] : vs.track_of[v]) model.objective[var] = weights.c2[v];

  auto sub = [](int v, int t) { return "_v" + std::to_string(v) + "_t" + std::to_string(t); };

  // Run continuity X[v,t] - X[v,t-1] = start - end, with X[v,-1] = 0.
  for (int v = 0; v < n_v; ++v) {
    for (int t = 0; t < horizon; ++t) {
      LinearConstraint row{ConstraintTag::c2c, "r2c" + sub(v, t), {}, Relation::eq, 0};
      if (int id = vs.find(VarKind::track, v, t); id >= 0) row.terms.emplace_back(id, 1);
      if (int id = vs.find(VarKind::track, v, t - 1); id >= 0) row.terms.emplace_back(id, -1);
      if (int id = vs.find(VarKind::start, v, t); id >= 0) row.terms.emplace_back(id, -1);
      if (int id = vs.find(VarKind::end, v, t); id >= 0) row.terms.emplace_back(id, 1);
      if (!row.terms.empty()) model.rows.push_back(std::move(row));
    }
  }
  // Minimum up time: a start within the last gamma_up slots keeps tracking on.
  for (int v = 0; v < n_v; ++v) {
    if (ctx[v].gamma_up <= 0) continue;
    for (int t = 0; t < horizon; ++t) {
      LinearConstraint row{ConstraintTag::c2d, "r2d" + sub(v, t), {}, Relation::le, 0};
      for (int tau = std::max(0, t - ctx[v].gamma_up + 1); tau <= t; ++tau)
        if (int id = vs.find(VarKind::start, v, tau); id >= 0) row.terms.emplace_back(id, 1);
      if (row.terms.empty()) continue;
      if (int id = vs.find(VarKind::track, v, t); id >= 0) row.terms.emplace_back(id, -1);
      model.rows.push_back(std::move(row));
    }
  }
  // Minimum down time: an end within the last gamma_down slots keeps tracking off.
  for (int v = 0; v < n_v; ++v) {
    if (ctx[v].gamma_down <= 0) continue;
    for (int t = 0; t < horizon; ++t) {
      LinearConstraint row{ConstraintTag::c2e, "r2e" + sub(v, t), {}, Relation::le, 1};
      for (int tau = std::max(1, t - ctx[v].gamma_down + 1); tau <= t; ++tau)
        if (int id = vs.find(VarKind::end, v, tau); id >= 0) row.terms.emplace_back(id, 1);
      if (row.terms.empty()) continue;
      if (int id = vs.find(VarKind::track, v, t); id >= 0) row.terms.emplace_back(id, 1);
      model.rows.push_back(std::move(row));
    }
  }
  // Setup occupancy: Yu[v,t] = sum of starts in (t, t+delta_up].
  for (int v = 0; v < n_v; ++v) {
    for (int t = 0; t < horizon; ++t) {
      int yu = vs.find(VarKind::setup_occ, v, t);
      if (yu < 0) continue;
      LinearConstraint row{ConstraintTag::c2f, "r2f" + sub(v, t), {{yu, 1}}, Relation::eq, 0};
      for (int tau = t + 1; tau <= t + ctx[v].delta_up; ++tau)
        if (int id = vs.find(VarKind::start, v, tau); id >= 0) row.terms.emplace_back(id, -1);
      model.rows.push_back(std::move(row));
    }
  }
  // Teardown occupancy: Yd[v,t] = sum of ends in (t-delta_down, t].
  for (int v = 0; v < n_v; ++v) {
    for (int t = 0; t < horizon; ++t) {
      int yd = vs.find(VarKind::teardown_occ, v, t);
      if (yd < 0) continue;
      LinearConstraint row{ConstraintTag::c2g, "r2g" + sub(v, t), {{yd, 1}}, Relation::eq, 0};
      for (int tau = t - ctx[v].delta_down + 1; tau <= t; ++tau)
        if (int id = vs.find(VarKind::end, v, tau); id >= 0) row.terms.emplace_back(id, -1);
      model.rows.push_back(std::move(row));
    }
  }

  auto occupancy_terms = [&vs](int v, int t, std::vector<std::pair<int, long>>& terms) {
    if (int id = vs.find(VarKind::teardown_occ, v, t); id >= 0) terms.emplace_back(id, 1);
    if (int id = vs.find(VarKind::track, v, t); id >= 0) terms.emplace_back(id, 1);
    if (int id = vs.find(VarKind::setup_occ, v, t); id >= 0) terms.emplace_back(id, 1);
  };

  // One track per resource per slot, setup and teardown included.
  for (size_t r = 0; r < inst.resources.size(); ++r) {
    std::vector<int> vps_of_r;
    for (int v = 0; v < n_v; ++v) {
      const auto& ids = inst.view_periods[v].resource_ids;
      if (std::find(ids.begin(), ids.end(), inst.resources[r].id) != ids.end())
        vps_of_r.push_back(v);
    }
    for (int t = 0; t < horizon; ++t) {
      LinearConstraint row{ConstraintTag::c2h,
                           "r2h_r" + std::to_string(r) + "_t" + std::to_string(t),
                           {},
                           Relation::le,
                           1};
      for (int v : vps_of_r) occupancy_terms(v, t, row.terms);
      if (row.terms.size() >= 2) model.rows.push_back(std::move(row));
    }
  }

  // Tracked slots within [d_min, d_max]·x. An activity with no reachable
  // tracking variables gets x forced to zero by the lower bound.
  for (int a = 0; a < n_a; ++a) {
    const Activity& act = inst.activities[a];
    LinearConstraint lo{ConstraintTag::c2i_min, "r2i_min_a" + std::to_string(a), {}, Relation::le, 0};
    LinearConstraint hi{ConstraintTag::c2i_max, "r2i_max_a" + std::to_string(a), {}, Relation::le, 0};
    lo.terms.emplace_back(vs.x_of[a], act.d_min_slots);
    hi.terms.emplace_back(vs.x_of[a], -act.d_max_slots);
    for (const std::string& vid : act.view_period_ids) {
      const int v = inst.vp_index.at(vid);
      for (const auto& [t, var] : vs.track_of[v]) {
        lo.terms.emplace_back(var, -1);
        hi.terms.emplace_back(var, 1);
      }
    }
    model.rows.push_back(std::move(lo));
    model.rows.push_back(std::move(hi));

    int longest_window = 0;
    for (const std::string& vid : act.view_period_ids)
      for (const Interval& w : inst.view_period(vid).windows)
        longest_window = std::max(longest_window, w.length());
    if (longest_window < act.d_min_slots + act.setup_slots + act.teardown_slots)
      model.warnings.push_back("activity " + act.id +
                               " looks structurally unschedulable: longest window " +
                               std::to_string(longest_window) + " slots < d_min+setup+teardown " +
                               std::to_string(act.d_min_slots + act.setup_slots + act.teardown_slots));
  }

  // One track per mission per slot across all antennas.
  if (!options.ablated.contains(ConstraintTag::c2j)) {
    for (size_t m = 0; m < inst.missions.size(); ++m) {
      std::vector<int> vps_of_m;
      for (const std::string& aid : inst.missions[m].activity_ids)
        for (const std::string& vid : inst.activity(aid).view_period_ids)
          vps_of_m.push_back(inst.vp_index.at(vid));
      std::sort(vps_of_m.begin(), vps_of_m.end());
      for (int t = 0; t < horizon; ++t) {
        LinearConstraint row{ConstraintTag::c2j,
                             "r2j_m" + std::to_string(m) + "_t" + std::to_string(t),
                             {},
                             Relation::le,
                             1};
        for (int v : vps_of_m) occupancy_terms(v, t, row.terms);
        if (row.terms.size() >= 2) model.rows.push_back(std::move(row));
      }
    }
  }

  // XOR split linkage.
  std::unordered_map<std::string, int> x_var_of_activity;
  for (int a = 0; a < n_a; ++a) x_var_of_activity.emplace(inst.activities[a].id, vs.x_of[a]);
  for (LinearConstraint& row : xor_constraints(expanded.registry, x_var_of_activity))
    if (!options.ablated.contains(row.tag)) model.rows.push_back(std::move(row));

  if (options.single_interval) {
    for (int v = 0; v < n_v; ++v) {
      LinearConstraint row{ConstraintTag::single_interval, "rsi_v" + std::to_string(v), {},
                           Relation::le, 1};
      for (const auto& [t, var] : vs.start_of[v]) row.terms.emplace_back(var, 1);
      std::sort(row.terms.begin(), row.terms.end());
      if (row.terms.size() >= 2) model.rows.push_back(std::move(row));
    }
  }

  return model;
}

ModelCounts count_model(const MilpModel& model) {
  ModelCounts counts;
  counts.n_binaries = model.vars.size();
  counts.n_binaries_dense = static_cast<long>(model.activities.size()) +
                            5L * static_cast<long>(model.vps.size()) * model.horizon;
  counts.n_rows = static_cast<long>(model.rows.size());
  std::map<std::string, long> by_tag;
  for (const LinearConstraint& row : model.rows) ++by_tag[tag_name(row.tag)];
  counts.rows_by_tag.assign(by_tag.begin(), by_tag.end());
  return counts;
}

std::optional<RowViolation> check_assignment(const MilpModel& model,
                                             const std::vector<std::uint8_t>& values) {
  if (static_cast<int>(values.size()) != model.vars.size())
    fail(ErrorKind::decode, "assignment covers " + std::to_string(values.size()) + " of " +
                                std::to_string(model.vars.size()) + " variables");
  for (std::uint8_t v : values)
    if (v > 1) fail(ErrorKind::decode, "assignment has a non-binary value");
  for (const LinearConstraint& row : model.rows) {
    long sum = 0;
    for (const auto& [var, coef] : row.terms) sum += coef * values[var];
    const bool ok = row.rel == Relation::le ? sum <= row.rhs : sum == row.rhs;
    if (!ok) return RowViolation{row.tag, row.name};
  }
  return std::nullopt;
}

double recompute_objective(const MilpModel& model, const std::vector<std::uint8_t>& values) {
  double total = 0.0;
  for (int i = 0; i < model.vars.size(); ++i)
    if (values[i]) total += model.objective[i];
  return total;
}

Schedule extract_schedule(const MilpModel& model, const std::vector<std::uint8_t>& values) {
  if (auto violation = check_assignment(model, values))
    fail(ErrorKind::decode, "assignment violates constraint " + std::string(tag_name(violation->tag)) +
                                " (row " + violation->row_name + ")");

  Schedule schedule;
  for (size_t v = 0; v < model.vps.size(); ++v) {
    const VpMeta& vp = model.vps[v];
    const ActivityMeta& owner = model.activities[vp.owner];
    std::vector<int> on;
    for (const auto& [t, var] : model.vars.track_of[v])
      if (values[var]) on.push_back(t);
    std::sort(on.begin(), on.end());
    for (size_t i = 0; i < on.size();) {
      size_t j = i + 1;
      while (j < on.size() && on[j] == on[j - 1] + 1) ++j;
      Track track;
      track.activity_id = owner.id;
      track.parent_id = owner.parent_id.empty() ? owner.id : owner.parent_id;
      track.mission_id = owner.mission_id;
      track.vp_id = vp.id;
      track.resource_ids = vp.resource_ids;
      track.track = {on[i], on[j - 1] + 1};
      track.setup = {track.track.start - vp.setup_slots, track.track.start};
      track.teardown = {track.track.end, track.track.end + vp.teardown_slots};
      schedule.tracks.push_back(std::move(track));
      i = j;
    }
  }
  std::sort(schedule.tracks.begin(), schedule.tracks.end(), [](const Track& a, const Track& b) {
    return std::tie(a.vp_id, a.track.start) < std::tie(b.vp_id, b.track.start);
  });
  for (size_t a = 0; a < model.activities.size(); ++a)
    if (values[model.vars.x_of[a]]) schedule.completed.push_back(model.activities[a].id);
  std::sort(schedule.completed.begin(), schedule.completed.end());
  return schedule;
}

std::vector<std::uint8_t> schedule_to_assignment(const MilpModel& model, const Schedule& schedule) {
  std::vector<std::uint8_t> values(model.vars.size(), 0);
  std::unordered_map<std::string, int> activity_pos, vp_pos;
  for (size_t a = 0; a < model.activities.size(); ++a) activity_pos.emplace(model.activities[a].id, a);
  for (size_t v = 0; v < model.vps.size(); ++v) vp_pos.emplace(model.vps[v].id, v);

  for (const std::string& id : schedule.completed) {
    auto it = activity_pos.find(id);
    if (it == activity_pos.end()) fail(ErrorKind::decode, "completed activity " + id + " is not in the model");
    values[model.vars.x_of[it->second]] = 1;
  }
  auto set_var = [&](VarKind kind, int v, int t, const std::string& what) {
    int id = model.vars.find(kind, v, t);
    if (id < 0)
      fail(ErrorKind::decode, what + " at slot " + std::to_string(t) + " has no model variable");
    values[id] = 1;
  };
  for (const Track& track : schedule.tracks) {
    auto it = vp_pos.find(track.vp_id);
    if (it == vp_pos.end()) fail(ErrorKind::decode, "view period " + track.vp_id + " is not in the model");
    const int v = it->second;
    for (int t = track.track.start; t < track.track.end; ++t)
      set_var(VarKind::track, v, t, "track on " + track.vp_id);
    set_var(VarKind::start, v, track.track.start, "start of " + track.vp_id);
    if (track.track.end < model.horizon || model.vps[v].teardown_slots > 0)
      set_var(VarKind::end, v, track.track.end, "end of " + track.vp_id);
    for (int t = track.setup.start; t < track.setup.end; ++t)
      set_var(VarKind::setup_occ, v, t, "setup on " + track.vp_id);
    for (int t = track.teardown.start; t < track.teardown.end; ++t)
      set_var(VarKind::teardown_occ, v, t, "teardown on " + track.vp_id);
  }
  return values;
}

}  // namespace antsched
