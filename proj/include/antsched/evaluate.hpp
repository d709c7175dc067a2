#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antsched/schedule.hpp"
#include "antsched/splitter.hpp"

namespace antsched {

enum class RuleTag {
  in_view_period,
  duration_bounds,
  setup_teardown_shape,
  resource_overlap,
  mission_overlap,
  split_rules,
  min_up_down,
};

const char* to_string(RuleTag tag);

struct TrackVerdict {
  int track_index = 0;
  std::vector<RuleTag> violations;
};

struct ValidationReport {
  std::vector<TrackVerdict> verdicts;           // one per track, schedule order
  std::vector<std::string> global_violations;   // schedule-level breaches (no single track to blame)
  double valid_fraction = 100.0;                // percent of tracks with zero violations
  bool empty_schedule = false;                  // 100.0 by convention when there are no tracks

  bool overall_valid() const { return valid_fraction == 100.0 && global_violations.empty(); }
};

// Re-checks a schedule against the scheduling rules using interval arithmetic
// only, with no MILP machinery involved. `expanded` must contain the split
// clones the schedule may reference. Default mode matches the formulation:
// setup and teardown may extend outside the view-period window (they still
// block the resources); strict mode requires full containment.
ValidationReport validate_schedule(const ProblemInstance& expanded, const SplitRegistry& registry,
                                   const Schedule& schedule, bool strict_containment = false);

struct MissionStat {
  std::string mission_id;
  double t_s_hours = 0.0;
  double t_r_hours = 0.0;
  double ratio = 0.0;
};

struct MetricsReport {
  double hours_satisfied = 0.0;
  double satisfied_time_fraction = 0.0;  // pooled: sum T_S / sum T_R, in [0,1]
  int n_requests = 0;
  int n_satisfied_requests = 0;
  double satisfied_request_fraction = 0.0;  // in [0,1]
  std::vector<MissionStat> per_mission;     // missions with T_R > 0, instance order
  std::vector<std::string> zero_request_missions;
  double u_rms = 0.0;
  double u_max = 0.0;
  double u_avg = 0.0;                  // mean satisfaction ratio, in [0,1]
  std::optional<double> u_prio;        // present when prioritized missions were given
  double distance = 0.0;               // +inf when u_avg (or required u_prio) is zero
  bool flagged_invalid = false;        // set by callers that validated first
};

// Satisfaction metrics from the schedule alone. Tracked hours exclude setup
// and teardown; clone tracks and completions attribute to their parents, and
// clones never count as requests. Accepts the original or expanded instance.
MetricsReport compute_metrics(const ProblemInstance& instance, const SplitRegistry& registry,
                              const Schedule& schedule,
                              const std::set<std::string>& prioritized = {});

// Euclidean distance in (U_RMS, U_MAX, 1/U_AVG [, 1/U_PRIO]) space.
double selection_distance(const MetricsReport& metrics, bool prioritized);

}  // namespace antsched
