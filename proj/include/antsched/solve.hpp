#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antsched/milp.hpp"

namespace antsched {

enum class SolveStatus { optimal, feasible_time_limit, infeasible, error };

const char* to_string(SolveStatus status);

struct Assignment {
  std::vector<std::uint8_t> values;
  double objective = 0.0;
  SolveStatus status = SolveStatus::error;
  std::string diagnostics;
};

// A solver backend: given a model and a per-call time budget, produce an
// assignment. Returned non-error assignments always satisfy every model row.
using SolverFn = std::function<Assignment(const MilpModel&, double time_limit_s)>;

struct OracleLimits {
  int max_vars = 24;
};

// Testing oracle: exhaustively enumerates every binary vector over the
// model's variables (Gray-code order with incremental row activities),
// keeps the feasible one with the best objective, ties broken by the
// lexicographically smallest vector. Refuses models above max_vars.
Assignment solve_exact_oracle(const MilpModel& model, const OracleLimits& limits = {});
Assignment solve_exact_oracle(const ExpandedInstance& expanded, const Weights& weights,
                              const OracleLimits& limits = {}, const ModelOptions& options = {});

// Runs an external MILP solver process. The command template must contain
// the placeholders {mps}, {sol} and {time_limit_s}; the process reads the
// exported MPS file and writes a solution file (see mps.hpp). Values within
// 1e-6 of an integer are rounded; the rounded assignment is validated against
// the model before being returned.
Assignment solve_external(const MilpModel& model, const std::string& command_template,
                          double time_limit_s);

// "oracle" or a command template containing {mps}.
SolverFn make_backend(const std::string& backend_spec);

}  // namespace antsched
