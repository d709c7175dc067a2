#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antsched/error.hpp"
#include "antsched/evaluate.hpp"
#include "antsched/milp.hpp"
#include "antsched/solve.hpp"

namespace antsched {

struct BalancerConfig {
  double eta0 = 0.15;             // initial satisfaction threshold
  double incr_threshold = 0.05;   // threshold step once every mission clears it
  int k_max = 10;                 // patience: iterations without a reset
  double k_time_s = 1800.0;       // per-solve time budget; doubles on repeats
  double priority_multiplier = 5.0;
  std::set<std::string> prioritized_missions;
  int hard_cap_solves = 50;       // artifact safeguard, not part of the method
  ModelOptions model_options;

  void validate() const;
};

struct SavedSolution {
  Schedule schedule;
  MetricsReport metrics;
  Weights weights;      // weights used for this solve
  double threshold;     // threshold at solve time
  double objective;
  SolveStatus status;
};

struct IterationRecord {
  int solve_index = 0;
  int k_before = 0;
  double threshold_before = 0.0;
  double k_time_s = 0.0;
  double objective = 0.0;
  SolveStatus status = SolveStatus::error;
  std::map<std::string, double> satisfaction;
  double u_rms = 0.0, u_max = 0.0, u_avg = 0.0;
  std::optional<double> u_prio;
  double distance = 0.0;
  std::vector<std::string> doubled_missions;
  int threshold_escalations = 0;
  bool solution_repeated = false;
  double threshold_after = 0.0;
  int k_after = 0;
};

struct BalancerResult {
  std::vector<SavedSolution> solutions;
  int chosen_index = 0;
  std::vector<IterationRecord> log;
  bool hard_cap_fired = false;
};

// Thrown when a solve fails mid-loop; carries whatever was logged so callers
// can persist the partial run before surfacing the failure.
class BalancerAbort : public Error {
 public:
  BalancerAbort(const std::string& message, std::vector<IterationRecord> partial)
      : Error(ErrorKind::backend, message), partial_log(std::move(partial)) {}
  std::vector<IterationRecord> partial_log;
};

// Uniform weights, with prioritized missions' activities boosted to
// priority_multiplier in c1.
Weights initial_weights(const ExpandedInstance& expanded, const BalancerConfig& config);

// Doubles c1 of every activity (clones included) and c2 of every view period
// of each mission strictly below the threshold. Returns the doubled missions
// in instance order.
std::vector<std::string> update_weights(Weights& weights, const ExpandedInstance& expanded,
                                        const std::map<std::string, double>& satisfaction,
                                        double threshold);

// Index of the solution minimizing the selection distance; ties break to the
// earliest iteration.
int select_best(const std::vector<MetricsReport>& reports, bool prioritized);

// Iterative reweighting: solve, save, double the weights of missions below
// the threshold, escalate the threshold while every mission clears it,
// double the time budget when the solution repeats, stop after k_max
// iterations without a reset. Returns every saved solution plus the chosen
// one. A configurable hard cap bounds total solves; its firing is reported,
// not hidden.
BalancerResult run_balancer(const ExpandedInstance& expanded, const BalancerConfig& config,
                            const SolverFn& solver);

}  // namespace antsched
