#include "antsched/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antsched/error.hpp"

namespace antsched {

bool Resource::in_maintenance(int slot) const {
  for (const Interval& iv : maintenance)
    if (iv.start <= slot && slot < iv.end) return true;
  return false;
}

namespace {

void check_intervals(const std::vector<Interval>& ivs, int horizon, const std::string& what) {
  for (size_t i = 0; i < ivs.size(); ++i) {
    if (ivs[i].start < 0 || ivs[i].end > horizon || ivs[i].start >= ivs[i].end)
      fail(ErrorKind::integrity, what + " has malformed interval [" + std::to_string(ivs[i].start) +
                                     "," + std::to_string(ivs[i].end) + ") on a " +
                                     std::to_string(horizon) + "-slot grid");
    if (i > 0 && ivs[i].start < ivs[i - 1].end)
      fail(ErrorKind::integrity, what + " has unsorted or overlapping intervals");
  }
}

}  // namespace

void ProblemInstance::finalize() {
  resource_index.clear();
  mission_index.clear();
  activity_index.clear();
  vp_index.clear();
  vp_owner.assign(view_periods.size(), -1);

  if (grid.slot_minutes <= 0 || 60 % grid.slot_minutes != 0)
    fail(ErrorKind::config, "slot length must divide 60");
  if (grid.horizon_slots <= 0) fail(ErrorKind::config, "empty horizon");

  for (size_t i = 0; i < resources.size(); ++i) {
    if (!resource_index.emplace(resources[i].id, static_cast<int>(i)).second)
      fail(ErrorKind::integrity, "duplicate resource id " + resources[i].id);
    std::sort(resources[i].maintenance.begin(), resources[i].maintenance.end());
    check_intervals(resources[i].maintenance, grid.horizon_slots, "resource " + resources[i].id);
  }
  for (size_t i = 0; i < missions.size(); ++i) {
    if (!mission_index.emplace(missions[i].id, static_cast<int>(i)).second)
      fail(ErrorKind::integrity, "duplicate mission id " + missions[i].id);
    missions[i].activity_ids.clear();
  }
  for (size_t i = 0; i < view_periods.size(); ++i) {
    if (!vp_index.emplace(view_periods[i].id, static_cast<int>(i)).second)
      fail(ErrorKind::integrity, "duplicate view period id " + view_periods[i].id);
  }

  for (size_t i = 0; i < activities.size(); ++i) {
    Activity& a = activities[i];
    if (!activity_index.emplace(a.id, static_cast<int>(i)).second)
      fail(ErrorKind::integrity, "duplicate activity id " + a.id);
    auto m = mission_index.find(a.mission_id);
    if (m == mission_index.end())
      fail(ErrorKind::integrity, "activity " + a.id + " references missing mission " + a.mission_id);
    missions[m->second].activity_ids.push_back(a.id);

    if (a.d_min_slots <= 0 || a.d_min_slots > a.d_max_slots)
      fail(ErrorKind::integrity, "activity " + a.id + " needs 0 < d_min <= d_max in slots (got " +
                                     std::to_string(a.d_min_slots) + ", " +
                                     std::to_string(a.d_max_slots) + ")");
    if (a.setup_slots < 0 || a.teardown_slots < 0)
      fail(ErrorKind::integrity, "activity " + a.id + " has negative setup/teardown");
    if (a.min_up_slots == 0) a.min_up_slots = a.d_min_slots;
    if (a.min_up_slots < 0 || a.min_down_slots < 0)
      fail(ErrorKind::integrity, "activity " + a.id + " has negative min up/down time");
    if (a.view_period_ids.empty())
      fail(ErrorKind::integrity, "activity " + a.id + " has no view periods");

    for (const std::string& vid : a.view_period_ids) {
      auto v = vp_index.find(vid);
      if (v == vp_index.end())
        fail(ErrorKind::integrity, "activity " + a.id + " references missing view period " + vid);
      if (vp_owner[v->second] != -1)
        fail(ErrorKind::integrity,
             "view period " + vid + " is referenced by more than one activity (" +
                 activities[vp_owner[v->second]].id + " and " + a.id + ")");
      vp_owner[v->second] = static_cast<int>(i);
    }
  }

  for (size_t i = 0; i < view_periods.size(); ++i) {
    const ViewPeriod& vp = view_periods[i];
    if (vp_owner[i] == -1)
      fail(ErrorKind::integrity, "view period " + vp.id + " is not referenced by any activity");
    if (vp.resource_ids.empty())
      fail(ErrorKind::integrity, "view period " + vp.id + " lists no resources");
    for (const std::string& rid : vp.resource_ids)
      if (!resource_index.contains(rid))
        fail(ErrorKind::integrity, "view period " + vp.id + " references missing resource " + rid);
    check_intervals(vp.windows, grid.horizon_slots, "view period " + vp.id);
  }
}

const Activity& ProblemInstance::activity(const std::string& id) const {
  auto it = activity_index.find(id);
  if (it == activity_index.end()) fail(ErrorKind::integrity, "unknown activity " + id);
  return activities[it->second];
}

const ViewPeriod& ProblemInstance::view_period(const std::string& id) const {
  auto it = vp_index.find(id);
  if (it == vp_index.end()) fail(ErrorKind::integrity, "unknown view period " + id);
  return view_periods[it->second];
}

const Resource& ProblemInstance::resource(const std::string& id) const {
  auto it = resource_index.find(id);
  if (it == resource_index.end()) fail(ErrorKind::integrity, "unknown resource " + id);
  return resources[it->second];
}

InstanceSummary summarize(const ProblemInstance& instance) {
  InstanceSummary s;
  s.n_resources = static_cast<int>(instance.resources.size());
  s.n_activities = static_cast<int>(instance.activities.size());
  s.n_missions = static_cast<int>(instance.missions.size());
  long total_slots = 0;
  for (const Activity& a : instance.activities) total_slots += a.d_max_slots;
  s.requested_hours_exact = instance.grid.slots_to_hours(total_slots);
  s.requested_hours = std::lround(s.requested_hours_exact);
  return s;
}

}  // namespace antsched
