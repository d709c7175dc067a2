#include "antsched/solve.hpp"

#include <sys/wait.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "antsched/error.hpp"
#include "antsched/mps.hpp"

namespace antsched {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible_time_limit: return "feasible_time_limit";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::error: return "error";
  }
  return "?";
}

Assignment solve_exact_oracle(const MilpModel& model, const OracleLimits& limits) {
  const int n = model.vars.size();
  if (n > limits.max_vars)
    fail(ErrorKind::model, "oracle refuses " + std::to_string(n) + " binaries (limit " +
                               std::to_string(limits.max_vars) + "); it is a testing oracle, not a solver");

  std::vector<std::vector<std::pair<int, long>>> rows_of(n);
  for (size_t r = 0; r < model.rows.size(); ++r)
    for (const auto& [var, coef] : model.rows[r].terms)
      rows_of[var].emplace_back(static_cast<int>(r), coef);

  const size_t n_rows = model.rows.size();
  std::vector<long> activity(n_rows, 0);
  std::vector<char> violated(n_rows, 0);
  long n_violated = 0;
  auto refresh_row = [&](size_t r) {
    const LinearConstraint& row = model.rows[r];
    const bool bad = row.rel == Relation::le ? activity[r] > row.rhs : activity[r] != row.rhs;
    if (bad != static_cast<bool>(violated[r])) {
      violated[r] = bad;
      n_violated += bad ? 1 : -1;
    }
  };
  for (size_t r = 0; r < n_rows; ++r) refresh_row(r);

  std::vector<std::uint8_t> current(n, 0);
  std::vector<std::uint8_t> best;
  double current_obj = 0.0, best_obj = 0.0;
  bool found = false;
  if (n_violated == 0) {
    best = current;
    best_obj = 0.0;
    found = true;
  }

  const std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << n);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);  // Gray code: flip the lowest set bit's variable
    const int delta = current[bit] ? -1 : 1;
    current[bit] ^= 1;
    current_obj += delta * model.objective[bit];
    for (const auto& [r, coef] : rows_of[bit]) {
      activity[r] += delta * coef;
      refresh_row(r);
    }
    if (n_violated != 0) continue;
    if (!found || current_obj > best_obj + 1e-12 ||
        (std::abs(current_obj - best_obj) <= 1e-12 && current < best)) {
      best = current;
      best_obj = current_obj;
      found = true;
    }
  }

  Assignment result;
  if (!found) {
    result.status = SolveStatus::infeasible;
    result.diagnostics = "no feasible binary vector";
    return result;
  }
  result.values = std::move(best);
  result.objective = recompute_objective(model, result.values);
  result.status = SolveStatus::optimal;
  return result;
}

Assignment solve_exact_oracle(const ExpandedInstance& expanded, const Weights& weights,
                              const OracleLimits& limits, const ModelOptions& options) {
  return solve_exact_oracle(build_model(expanded, weights, options), limits);
}

namespace {

std::string substitute(std::string text, const std::string& key, const std::string& value) {
  for (size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos))
    text.replace(pos, key.size(), value), pos += value.size();
  return text;
}

std::string read_file_or_empty(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Assignment error_result(const std::string& diagnostics) {
  Assignment a;
  a.status = SolveStatus::error;
  a.diagnostics = diagnostics;
  return a;
}

}  // namespace

Assignment solve_external(const MilpModel& model, const std::string& command_template,
                          double time_limit_s) {
  namespace fs = std::filesystem;
  if (command_template.find("{mps}") == std::string::npos ||
      command_template.find("{sol}") == std::string::npos)
    fail(ErrorKind::backend, "command template needs {mps} and {sol} placeholders: " + command_template);

  char dir_template[] = "/tmp/antsched-XXXXXX";
  const char* dir_cstr = mkdtemp(dir_template);
  if (!dir_cstr) fail(ErrorKind::backend, "cannot create solver working directory");
  const fs::path dir(dir_cstr);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
  } cleanup{dir};

  const fs::path mps_path = dir / "model.mps";
  const fs::path sol_path = dir / "solution.sol";
  const fs::path log_path = dir / "solver.log";
  {
    std::ofstream out(mps_path);
    out << export_mps(model);
    if (!out) fail(ErrorKind::backend, "cannot write " + mps_path.string());
  }

  char limit_buf[32];
  std::snprintf(limit_buf, sizeof limit_buf, "%g", time_limit_s);
  std::string command = substitute(command_template, "{mps}", mps_path.string());
  command = substitute(command, "{sol}", sol_path.string());
  command = substitute(command, "{time_limit_s}", limit_buf);
  command = "( " + command + " ) > " + log_path.string() + " 2>&1";

  const int rc = std::system(command.c_str());
  std::string log = read_file_or_empty(log_path);
  if (log.size() > 4000) log = log.substr(log.size() - 4000);
  if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) != 0)
    return error_result("solver process failed (" + command + "): " + log);
  if (!fs::exists(sol_path)) return error_result("solver wrote no solution file: " + log);

  SolutionFile sol;
  try {
    sol = parse_solution_text(read_file_or_empty(sol_path));
  } catch (const Error& e) {
    return error_result(std::string("unparseable solution file: ") + e.what());
  }

  SolveStatus status;
  if (sol.status.empty() || sol.status == "optimal") status = SolveStatus::optimal;
  else if (sol.status == "feasible" || sol.status == "feasible_time_limit")
    status = SolveStatus::feasible_time_limit;
  else if (sol.status == "infeasible") status = SolveStatus::infeasible;
  else return error_result("solver reported status `" + sol.status + "`: " + log);

  Assignment result;
  result.status = status;
  if (status == SolveStatus::infeasible) {
    result.diagnostics = "backend reported infeasible";
    return result;
  }

  result.values.assign(model.vars.size(), 0);
  std::map<std::string, double> remaining = sol.values;
  for (int var = 0; var < model.vars.size(); ++var) {
    auto it = remaining.find(model.vars.name(var));
    if (it == remaining.end()) continue;  // absent means zero
    const double raw = it->second;
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-6)
      return error_result("value " + std::to_string(raw) + " for " + it->first + " is not integral");
    if (rounded != 0.0 && rounded != 1.0)
      return error_result("value " + std::to_string(raw) + " for " + it->first + " is not binary");
    result.values[var] = rounded == 1.0 ? 1 : 0;
    remaining.erase(it);
  }
  if (!remaining.empty())
    return error_result("solution names unknown variable " + remaining.begin()->first);

  if (auto violation = check_assignment(model, result.values))
    return error_result("backend assignment violates constraint " +
                        std::string(tag_name(violation->tag)) + " (row " + violation->row_name + ")");
  result.objective = recompute_objective(model, result.values);
  if (sol.has_objective && std::abs(sol.objective - result.objective) > 1e-6)
    result.diagnostics = "backend objective " + std::to_string(sol.objective) +
                         " differs from recomputed " + std::to_string(result.objective);
  return result;
}

SolverFn make_backend(const std::string& backend_spec) {
  if (backend_spec == "oracle") {
    return [](const MilpModel& model, double) {
      try {
        return solve_exact_oracle(model);
      } catch (const Error& e) {
        Assignment a;
        a.status = SolveStatus::error;
        a.diagnostics = e.what();
        return a;
      }
    };
  }
  if (backend_spec.find("{mps}") != std::string::npos) {
    return [backend_spec](const MilpModel& model, double time_limit_s) {
      return solve_external(model, backend_spec, time_limit_s);
    };
  }
  fail(ErrorKind::backend, "backend must be `oracle` or a command template with {mps}/{sol}: " +
                               backend_spec);
}

}  // namespace antsched
