#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antsched/milp_model.hpp"
#include "antsched/schedule.hpp"
#include "antsched/splitter.hpp"

namespace antsched {

struct ModelOptions {
  bool single_interval = false;           // add sum_t start[v,t] <= 1 per view period
  std::set<ConstraintTag> ablated;        // constraint families to drop (2j, 2k-2m only)
};

// Assembles the complete 0/1 program: objective c1'x + c2'X1 (maximize) and
// the continuity, min-up/down, setup/teardown, resource, duration, mission
// and split-linkage rows. Variables exist only where the view-period mask
// permits, so the "tracking only inside view periods" family holds by
// construction.
MilpModel build_model(const ExpandedInstance& expanded, const Weights& weights,
                      const ModelOptions& options = {});

Weights uniform_weights(const ProblemInstance& instance);

ModelCounts count_model(const MilpModel& model);

struct RowViolation {
  ConstraintTag tag;
  std::string row_name;
};

// Exact integer feasibility check of a 0/1 assignment against every row.
// Returns the first violated row in model order, or nullopt when feasible.
std::optional<RowViolation> check_assignment(const MilpModel& model,
                                             const std::vector<std::uint8_t>& values);

double recompute_objective(const MilpModel& model, const std::vector<std::uint8_t>& values);

// Decodes a feasible assignment into concrete tracks: each maximal tracked
// run becomes one track with its setup/teardown attached. Throws a decode
// error naming the first violated row if the assignment is infeasible.
Schedule extract_schedule(const MilpModel& model, const std::vector<std::uint8_t>& values);

// Re-encodes a schedule into the model's variable space (start/end/setup and
// teardown markers derived from the runs). Inverse of extract_schedule for
// feasible schedules.
std::vector<std::uint8_t> schedule_to_assignment(const MilpModel& model, const Schedule& schedule);

}  // namespace antsched
