#pragma once

#include <string>
#include <vector>

#include "antsched/instance.hpp"
#include "antsched/milp.hpp"
#include "antsched/splitter.hpp"

namespace antsched::testing {

// Small hand-buildable instances on short grids. Durations are in slots.
struct ActivitySpec {
  std::string id;
  std::string mission;
  int d_min;
  int d_max;
  int setup = 0;
  int teardown = 0;
  int min_up = 0;    // 0 means default (d_min)
  int min_down = 0;
  bool splittable = true;
};

struct VpSpec {
  std::string activity;
  std::vector<std::string> resources;
  std::vector<Interval> windows;
};

inline ProblemInstance micro_instance(int horizon_slots, int slot_minutes,
                                      const std::vector<std::string>& resources,
                                      const std::vector<ActivitySpec>& activities,
                                      const std::vector<VpSpec>& vps,
                                      const std::string& label = "micro") {
  ProblemInstance inst;
  inst.grid.slot_minutes = slot_minutes;
  inst.grid.horizon_slots = horizon_slots;
  inst.grid.week_start = "2016-10-31T00:00:00Z";
  inst.label = label;

  for (const std::string& rid : resources) inst.resources.push_back({rid, "test", 34, {}});

  std::vector<std::string> mission_ids;
  for (const ActivitySpec& spec : activities) {
    if (std::find(mission_ids.begin(), mission_ids.end(), spec.mission) == mission_ids.end())
      mission_ids.push_back(spec.mission);
    Activity a;
    a.id = spec.id;
    a.mission_id = spec.mission;
    a.d_min_slots = spec.d_min;
    a.d_max_slots = spec.d_max;
    a.setup_slots = spec.setup;
    a.teardown_slots = spec.teardown;
    a.min_up_slots = spec.min_up;
    a.min_down_slots = spec.min_down;
    a.splittable = spec.splittable;
    inst.activities.push_back(std::move(a));
  }
  for (const std::string& mid : mission_ids) inst.missions.push_back({mid, {}});

  int counter = 0;
  for (const VpSpec& spec : vps) {
    ViewPeriod vp;
    vp.id = spec.activity + "-vp" + std::to_string(counter++);
    vp.resource_ids = spec.resources;
    vp.windows = spec.windows;
    for (Activity& a : inst.activities)
      if (a.id == spec.activity) a.view_period_ids.push_back(vp.id);
    inst.view_periods.push_back(std::move(vp));
  }

  inst.finalize();
  return inst;
}

inline ExpandedInstance expanded_of(const ProblemInstance& inst) { return expand_splits(inst); }

// The standard corpus of tiny instances used by the oracle-equivalence and
// validity gates: every model stays within the oracle's variable budget.
std::vector<ExpandedInstance> micro_corpus();

}  // namespace antsched::testing
