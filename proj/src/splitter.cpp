#include "antsched/splitter.hpp"

#include <algorithm>

#include "antsched/error.hpp"

namespace antsched {

const SplitTriple* SplitRegistry::for_parent(const std::string& activity_id) const {
  auto it = by_parent.find(activity_id);
  return it == by_parent.end() ? nullptr : &triples[it->second];
}

namespace {

int half_or_fail(int slots, const std::string& what) {
  if (slots % 2 != 0)
    fail(ErrorKind::quantization, what + " (" + std::to_string(slots) + " slots) cannot be halved into whole slots");
  return slots / 2;
}

}  // namespace

ExpandedInstance expand_splits(const ProblemInstance& instance) {
  ExpandedInstance out;
  out.instance = instance;

  const int slots_per_hour = 60 / instance.grid.slot_minutes;
  const int eight_hours = 8 * slots_per_hour;
  const int four_hours = 4 * slots_per_hour;

  for (size_t parent_pos = 0; parent_pos < instance.activities.size(); ++parent_pos) {
    const Activity& parent = instance.activities[parent_pos];
    if (!parent.splittable || parent.d_max_slots < eight_hours) continue;
    // the expanded copy's parent is marked too, so re-expansion is a no-op
    out.instance.activities[parent_pos].splittable = false;

    const int clone_d_max = half_or_fail(parent.d_max_slots, "d_max of " + parent.id);
    int clone_d_min;
    if (parent.d_min_slots <= 2 * four_hours)
      clone_d_min = four_hours;
    else
      clone_d_min = half_or_fail(parent.d_min_slots, "d_min of " + parent.id);

    SplitTriple triple{parent.id, parent.id + "~1", parent.id + "~2"};
    for (const std::string& suffix : {std::string("~1"), std::string("~2")}) {
      Activity clone = parent;
      clone.id = parent.id + suffix;
      clone.d_min_slots = clone_d_min;
      clone.d_max_slots = clone_d_max;
      clone.min_up_slots = std::min(parent.min_up_slots, clone_d_min);
      clone.splittable = false;
      clone.view_period_ids.clear();
      for (const std::string& vid : parent.view_period_ids) {
        ViewPeriod vp = instance.view_period(vid);
        vp.id = vid + suffix;
        clone.view_period_ids.push_back(vp.id);
        out.instance.view_periods.push_back(std::move(vp));
      }
      out.instance.activities.push_back(std::move(clone));
    }
    int idx = static_cast<int>(out.registry.triples.size());
    out.registry.by_parent.emplace(triple.parent_id, idx);
    out.registry.by_clone.emplace(triple.clone_a_id, idx);
    out.registry.by_clone.emplace(triple.clone_b_id, idx);
    out.registry.triples.push_back(std::move(triple));
  }

  out.instance.finalize();
  return out;
}

std::vector<LinearConstraint> xor_constraints(
    const SplitRegistry& registry, const std::unordered_map<std::string, int>& x_var_of_activity) {
  std::vector<LinearConstraint> rows;
  rows.reserve(registry.triples.size() * 3);
  for (size_t i = 0; i < registry.triples.size(); ++i) {
    const SplitTriple& triple = registry.triples[i];
    const int x = x_var_of_activity.at(triple.parent_id);
    const int xa = x_var_of_activity.at(triple.clone_a_id);
    const int xb = x_var_of_activity.at(triple.clone_b_id);
    const std::string n = std::to_string(i);
    rows.push_back({ConstraintTag::c2k, "r2k_" + n, {{xa, 1}, {xb, -1}}, Relation::le, 0});
    rows.push_back({ConstraintTag::c2l, "r2l_" + n, {{xb, 1}, {xa, -1}}, Relation::le, 0});
    rows.push_back({ConstraintTag::c2m, "r2m_" + n, {{x, 1}, {xa, 1}}, Relation::le, 1});
  }
  return rows;
}

}  // namespace antsched
