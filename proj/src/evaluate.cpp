#include "antsched/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "antsched/error.hpp"

namespace antsched {

const char* to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::in_view_period: return "in_view_period";
    case RuleTag::duration_bounds: return "duration_bounds";
    case RuleTag::setup_teardown_shape: return "setup_teardown_shape";
    case RuleTag::resource_overlap: return "resource_overlap";
    case RuleTag::mission_overlap: return "mission_overlap";
    case RuleTag::split_rules: return "split_rules";
    case RuleTag::min_up_down: return "min_up_down";
  }
  return "?";
}

namespace {

bool interval_in_maintenance(const Resource& resource, const Interval& interval) {
  for (const Interval& m : resource.maintenance)
    if (m.overlaps(interval)) return true;
  return false;
}

bool inside_some_window(const ViewPeriod& vp, const Interval& interval) {
  for (const Interval& w : vp.windows)
    if (w.contains(interval)) return true;
  return false;
}

}  // namespace

ValidationReport validate_schedule(const ProblemInstance& expanded, const SplitRegistry& registry,
                                   const Schedule& schedule, bool strict_containment) {
  ValidationReport report;
  const int horizon = expanded.horizon();
  const int n = static_cast<int>(schedule.tracks.size());
  report.verdicts.resize(n);
  std::vector<std::set<RuleTag>> tags(n);

  std::unordered_set<std::string> completed(schedule.completed.begin(), schedule.completed.end());
  for (const std::string& id : schedule.completed)
    expanded.activity(id);  // throws on unknown ids
  std::unordered_map<std::string, long> tracked_slots;      // activity -> slots
  std::unordered_map<std::string, std::vector<int>> tracks_of_activity;

  for (int i = 0; i < n; ++i) {
    const Track& track = schedule.tracks[i];
    const Activity& activity = expanded.activity(track.activity_id);
    const ViewPeriod& vp = expanded.view_period(track.vp_id);
    tracked_slots[track.activity_id] += track.track.length();
    tracks_of_activity[track.activity_id].push_back(i);

    // Shape: setup/teardown lengths match the request and abut the tracking
    // interval, everything inside the horizon.
    if (track.setup.length() != activity.setup_slots ||
        track.teardown.length() != activity.teardown_slots ||
        track.setup.end != track.track.start || track.track.end != track.teardown.start ||
        track.track.length() <= 0 || track.span().start < 0 || track.span().end > horizon)
      tags[i].insert(RuleTag::setup_teardown_shape);

    // Visibility: the view period must belong to the activity, carry the
    // claimed resources, host the tracking interval in one of its windows,
    // and be clear of maintenance there.
    bool visible = std::find(activity.view_period_ids.begin(), activity.view_period_ids.end(),
                             track.vp_id) != activity.view_period_ids.end();
    visible = visible && track.resource_ids == vp.resource_ids;
    const Interval containment = strict_containment ? track.span() : track.track;
    visible = visible && inside_some_window(vp, containment);
    if (visible)
      for (const std::string& rid : vp.resource_ids)
        if (interval_in_maintenance(expanded.resource(rid), containment)) visible = false;
    if (!visible) tags[i].insert(RuleTag::in_view_period);

    // Minimum up time, truncated at the horizon like the formulation.
    if (track.track.length() < std::min(activity.min_up_slots, horizon - track.track.start))
      tags[i].insert(RuleTag::min_up_down);
  }

  // Minimum down time between consecutive runs on the same view period.
  std::map<std::string, std::vector<int>> by_vp;
  for (int i = 0; i < n; ++i) by_vp[schedule.tracks[i].vp_id].push_back(i);
  for (auto& [vp_id, indices] : by_vp) {
    std::sort(indices.begin(), indices.end(), [&](int a, int b) {
      return schedule.tracks[a].track.start < schedule.tracks[b].track.start;
    });
    for (size_t k = 1; k < indices.size(); ++k) {
      const Track& prev = schedule.tracks[indices[k - 1]];
      const Track& next = schedule.tracks[indices[k]];
      const int gamma_down = expanded.activity(prev.activity_id).min_down_slots;
      if (next.track.start < prev.track.end + gamma_down) {
        tags[indices[k - 1]].insert(RuleTag::min_up_down);
        tags[indices[k]].insert(RuleTag::min_up_down);
      }
    }
  }

  // Full spans (setup..teardown) must not intersect on any shared resource,
  // nor between tracks of one mission anywhere on the network.
  auto tag_span_overlaps = [&](const std::vector<int>& indices, RuleTag tag) {
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      return schedule.tracks[a].span().start < schedule.tracks[b].span().start;
    });
    for (size_t k = 0; k < sorted.size(); ++k)
      for (size_t j = k + 1; j < sorted.size(); ++j) {
        if (schedule.tracks[sorted[j]].span().start >= schedule.tracks[sorted[k]].span().end) break;
        tags[sorted[k]].insert(tag);
        tags[sorted[j]].insert(tag);
      }
  };
  std::map<std::string, std::vector<int>> by_resource, by_mission;
  for (int i = 0; i < n; ++i) {
    for (const std::string& rid : schedule.tracks[i].resource_ids) by_resource[rid].push_back(i);
    by_mission[schedule.tracks[i].mission_id].push_back(i);
  }
  for (const auto& [rid, indices] : by_resource) tag_span_overlaps(indices, RuleTag::resource_overlap);
  for (const auto& [mid, indices] : by_mission) tag_span_overlaps(indices, RuleTag::mission_overlap);

  // Per-activity accounting: completed activities track within their bounds,
  // everything else tracks nothing.
  auto blame_activity = [&](const std::string& id, RuleTag tag, const std::string& message) {
    auto it = tracks_of_activity.find(id);
    if (it == tracks_of_activity.end())
      report.global_violations.push_back(std::string(to_string(tag)) + ": " + message);
    else
      for (int i : it->second) tags[i].insert(tag);
  };
  for (const Activity& activity : expanded.activities) {
    const long slots = tracked_slots.contains(activity.id) ? tracked_slots[activity.id] : 0;
    if (completed.contains(activity.id)) {
      if (slots < activity.d_min_slots || slots > activity.d_max_slots)
        blame_activity(activity.id, RuleTag::duration_bounds,
                       "completed activity " + activity.id + " tracked " + std::to_string(slots) +
                           " slots outside [" + std::to_string(activity.d_min_slots) + ", " +
                           std::to_string(activity.d_max_slots) + "]");
    } else if (slots != 0) {
      blame_activity(activity.id, RuleTag::duration_bounds,
                     "activity " + activity.id + " tracked " + std::to_string(slots) +
                         " slots without being completed");
    }
  }

  // Split linkage: full request XOR both clones, and clone totals within the
  // parent's bounds when split.
  for (const SplitTriple& triple : registry.triples) {
    const bool parent = completed.contains(triple.parent_id);
    const bool a = completed.contains(triple.clone_a_id);
    const bool b = completed.contains(triple.clone_b_id);
    auto blame_triple = [&](const std::string& message) {
      for (const std::string& id : {triple.parent_id, triple.clone_a_id, triple.clone_b_id})
        if (tracks_of_activity.contains(id))
          for (int i : tracks_of_activity[id]) tags[i].insert(RuleTag::split_rules);
      report.global_violations.push_back(std::string(to_string(RuleTag::split_rules)) + ": " + message);
    };
    if (parent && (a || b))
      blame_triple("activity " + triple.parent_id + " scheduled both whole and split");
    else if (a != b)
      blame_triple("only one clone of " + triple.parent_id + " completed");
    else if (a && b) {
      const Activity& parent_act = expanded.activity(triple.parent_id);
      const Activity& clone_a = expanded.activity(triple.clone_a_id);
      const Activity& clone_b = expanded.activity(triple.clone_b_id);
      const long sum = tracked_slots[triple.clone_a_id] + tracked_slots[triple.clone_b_id];
      if (sum < clone_a.d_min_slots + clone_b.d_min_slots || sum > parent_act.d_max_slots)
        blame_triple("clones of " + triple.parent_id + " tracked " + std::to_string(sum) +
                     " slots outside the split bounds");
    }
  }

  int valid = 0;
  for (int i = 0; i < n; ++i) {
    report.verdicts[i].track_index = i;
    report.verdicts[i].violations.assign(tags[i].begin(), tags[i].end());
    if (tags[i].empty()) ++valid;
  }
  report.empty_schedule = n == 0;
  report.valid_fraction = n == 0 ? 100.0 : 100.0 * valid / n;
  return report;
}

double selection_distance(const MetricsReport& metrics, bool prioritized) {
  if (metrics.u_avg <= 0.0) return std::numeric_limits<double>::infinity();
  double sum = metrics.u_rms * metrics.u_rms + metrics.u_max * metrics.u_max +
               1.0 / (metrics.u_avg * metrics.u_avg);
  if (prioritized) {
    if (!metrics.u_prio || *metrics.u_prio <= 0.0) return std::numeric_limits<double>::infinity();
    sum += 1.0 / (*metrics.u_prio * *metrics.u_prio);
  }
  return std::sqrt(sum);
}

MetricsReport compute_metrics(const ProblemInstance& instance, const SplitRegistry& registry,
                              const Schedule& schedule, const std::set<std::string>& prioritized) {
  MetricsReport report;
  for (const Activity& activity : instance.activities)
    if (!registry.is_clone(activity.id)) ++report.n_requests;

  std::unordered_map<std::string, double> scheduled_hours;  // mission -> tracked hours
  for (const Track& track : schedule.tracks)
    scheduled_hours[track.mission_id] += instance.grid.slots_to_hours(track.track.length());

  std::unordered_set<std::string> completed(schedule.completed.begin(), schedule.completed.end());
  for (const Activity& activity : instance.activities) {
    if (registry.is_clone(activity.id)) continue;
    bool satisfied = completed.contains(activity.id);
    if (!satisfied)
      if (const SplitTriple* triple = registry.for_parent(activity.id))
        satisfied = completed.contains(triple->clone_a_id) && completed.contains(triple->clone_b_id);
    if (satisfied) ++report.n_satisfied_requests;
  }

  double total_requested = 0.0;
  double sum_residual_sq = 0.0, sum_ratio = 0.0;
  double prio_sum = 0.0;
  int prio_count = 0;
  for (const Mission& mission : instance.missions) {
    long requested_slots = 0;
    for (const std::string& aid : mission.activity_ids)
      if (!registry.is_clone(aid)) requested_slots += instance.activity(aid).d_max_slots;
    if (requested_slots == 0) {
      report.zero_request_missions.push_back(mission.id);
      continue;
    }
    MissionStat stat;
    stat.mission_id = mission.id;
    stat.t_r_hours = instance.grid.slots_to_hours(requested_slots);
    stat.t_s_hours = scheduled_hours.contains(mission.id) ? scheduled_hours[mission.id] : 0.0;
    stat.ratio = stat.t_s_hours / stat.t_r_hours;
    report.per_mission.push_back(stat);

    total_requested += stat.t_r_hours;
    report.hours_satisfied += stat.t_s_hours;
    const double residual = std::max(0.0, (stat.t_r_hours - stat.t_s_hours) / stat.t_r_hours);
    sum_residual_sq += residual * residual;
    report.u_max = std::max(report.u_max, residual);
    sum_ratio += stat.ratio;
    if (prioritized.contains(mission.id)) {
      prio_sum += stat.ratio;
      ++prio_count;
    }
  }

  const size_t n_missions = report.per_mission.size();
  if (n_missions > 0) {
    report.u_rms = std::sqrt(sum_residual_sq / n_missions);
    report.u_avg = sum_ratio / n_missions;
  }
  if (total_requested > 0.0) report.satisfied_time_fraction = report.hours_satisfied / total_requested;
  if (report.n_requests > 0)
    report.satisfied_request_fraction =
        static_cast<double>(report.n_satisfied_requests) / report.n_requests;
  if (!prioritized.empty()) report.u_prio = prio_count > 0 ? prio_sum / prio_count : 0.0;
  report.distance = selection_distance(report, !prioritized.empty());
  return report;
}

}  // namespace antsched
