#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antsched/time_grid.hpp"

namespace antsched {

// Half-open slot interval [start, end).
struct Interval {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool contains(const Interval& other) const { return start <= other.start && other.end <= end; }
  bool overlaps(const Interval& other) const { return start < other.end && other.start < end; }
  auto operator<=>(const Interval&) const = default;
};

struct Resource {
  std::string id;             // e.g. "DSS-43"
  std::string complex;
  int diameter_m = 34;
  std::vector<Interval> maintenance;  // sorted, non-overlapping

  bool in_maintenance(int slot) const;
};

struct Mission {
  std::string id;
  std::vector<std::string> activity_ids;  // derived during finalize()
};

struct Activity {
  std::string id;
  std::string mission_id;
  int d_min_slots = 0;
  int d_max_slots = 0;
  int setup_slots = 0;     // antenna preparation before tracking
  int teardown_slots = 0;  // antenna release after tracking
  int min_up_slots = 0;    // shortest permitted on-interval once tracking starts
  int min_down_slots = 0;  // mandatory idle on the view period after tracking stops
  std::vector<std::string> view_period_ids;
  bool splittable = true;  // split clones are marked ineligible
};

struct ViewPeriod {
  std::string id;
  std::vector<std::string> resource_ids;  // >1 means antenna arraying
  std::vector<Interval> windows;          // sorted, non-overlapping, within horizon
};

// A full scheduling problem: one week of requests against the antenna network.
// Immutable after finalize(); safe to share across threads.
struct ProblemInstance {
  TimeGrid grid;
  std::string label;
  std::vector<Resource> resources;
  std::vector<Mission> missions;
  std::vector<Activity> activities;
  std::vector<ViewPeriod> view_periods;

  // Derived lookups, built by finalize().
  std::unordered_map<std::string, int> resource_index;
  std::unordered_map<std::string, int> mission_index;
  std::unordered_map<std::string, int> activity_index;
  std::unordered_map<std::string, int> vp_index;
  std::vector<int> vp_owner;  // view-period position -> owning activity position

  // Rebuilds indices, applies defaults (min_up = d_min, min_down = 0) and
  // checks every structural invariant; throws integrity/quantization errors.
  void finalize();

  const Activity& activity(const std::string& id) const;
  const ViewPeriod& view_period(const std::string& id) const;
  const Resource& resource(const std::string& id) const;
  int horizon() const { return grid.horizon_slots; }
};

struct InstanceSummary {
  int n_resources = 0;
  int n_activities = 0;       // requested activities (originals)
  long requested_hours = 0;   // total T_R, rounded to the nearest whole hour
  double requested_hours_exact = 0.0;
  int n_missions = 0;

  auto operator<=>(const InstanceSummary&) const = default;
};

InstanceSummary summarize(const ProblemInstance& instance);

}  // namespace antsched
