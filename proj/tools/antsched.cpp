#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>

#include "antsched/balance.hpp"
#include "antsched/error.hpp"
#include "antsched/generator.hpp"
#include "antsched/json_io.hpp"
#include "antsched/milp.hpp"
#include "antsched/mps.hpp"
#include "antsched/reports.hpp"
#include "antsched/sha256.hpp"
#include "antsched/solve.hpp"

namespace {

using namespace antsched;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBackend = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::backend:
    case ErrorKind::model:
    case ErrorKind::decode:
      return kExitBackend;
    default:
      return kExitUsage;
  }
}

std::set<ConstraintTag> parse_ablation(const std::string& list) {
  std::set<ConstraintTag> tags;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "2j") tags.insert(ConstraintTag::c2j);
    else if (token == "2k") tags.insert(ConstraintTag::c2k);
    else if (token == "2l") tags.insert(ConstraintTag::c2l);
    else if (token == "2m") tags.insert(ConstraintTag::c2m);
    else if (token == "2k-2m")
      tags.insert({ConstraintTag::c2k, ConstraintTag::c2l, ConstraintTag::c2m});
    else fail(ErrorKind::usage, "unknown ablation token `" + token + "` (known: 2j, 2k, 2l, 2m, 2k-2m)");
  }
  return tags;
}

std::set<std::string> parse_mission_list(const std::string& list, const ProblemInstance& inst) {
  std::set<std::string> missions;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (!inst.mission_index.contains(token))
      fail(ErrorKind::usage, "unknown mission `" + token + "` in prioritize list");
    missions.insert(token);
  }
  return missions;
}

std::string utc_now() {
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_summary(const MetricsReport& m, double valid_pct) {
  std::printf("Valid tracks (%%)                        %.1f\n", valid_pct);
  std::printf("Hours satisfied                         %.1f\n", m.hours_satisfied);
  std::printf("Overall satisfied time fraction (%%)     %.1f\n", m.satisfied_time_fraction * 100.0);
  std::printf("# of satisfied requests                 %d / %d\n", m.n_satisfied_requests,
              m.n_requests);
  std::printf("Overall satisfied request fraction (%%)  %.1f\n",
              m.satisfied_request_fraction * 100.0);
  std::printf("Avg. satisfied ratios (%%)               %.1f\n", m.u_avg * 100.0);
  std::printf("RMS of unsatisfied time fraction        %.2f\n", m.u_rms);
  std::printf("Max. unsatisfied time fraction (%%)      %.1f\n", m.u_max * 100.0);
  if (m.u_prio)
    std::printf("Prioritized satisfied ratios (%%)        %.1f\n", *m.u_prio * 100.0);
}

struct ScheduleArgs {
  std::string instance_path;
  std::string out_dir = ".";
  std::string solver;
  double time_limit = 1800.0;
  int iterations = 10;
  double threshold = 0.15;
  double threshold_increment = 0.05;
  std::string prioritize;
  double priority_weight = 5.0;
  long seed = 0;
  int hard_cap = 50;
  int oracle_max_vars = 24;
  bool strict_containment = false;
  bool single_interval = false;
  std::string ablate;
};

int cmd_schedule(const ScheduleArgs& args) {
  const std::string bytes = read_file(args.instance_path);
  const ProblemInstance instance = parse_instance(bytes);
  const ExpandedInstance expanded = expand_splits(instance);

  BalancerConfig config;
  config.eta0 = args.threshold;
  config.incr_threshold = args.threshold_increment;
  config.k_max = args.iterations;
  config.k_time_s = args.time_limit;
  config.priority_multiplier = args.priority_weight;
  config.prioritized_missions = parse_mission_list(args.prioritize, instance);
  config.hard_cap_solves = args.hard_cap;
  config.model_options.single_interval = args.single_interval;
  config.model_options.ablated = parse_ablation(args.ablate);
  config.validate();

  std::string backend = args.solver;
  if (backend.empty())
    if (const char* env = std::getenv("ANTSCHED_SOLVER")) backend = env;
  if (backend.empty()) backend = "oracle";
  SolverFn solver = make_backend(backend);
  if (backend == "oracle" && args.oracle_max_vars != 24) {
    const int max_vars = args.oracle_max_vars;
    solver = [max_vars](const MilpModel& model, double) {
      return solve_exact_oracle(model, {max_vars});
    };
  }

  RunManifest manifest;
  manifest.instance_label = instance.label;
  manifest.instance_sha256 = sha256_hex(bytes);
  manifest.backend = backend;
  manifest.seed = args.seed;
  {
    nlohmann::ordered_json echo;
    echo["eta0"] = config.eta0;
    echo["incr_threshold"] = config.incr_threshold;
    echo["k_max"] = config.k_max;
    echo["k_time_s"] = config.k_time_s;
    echo["priority_multiplier"] = config.priority_multiplier;
    echo["prioritized"] = config.prioritized_missions;
    echo["hard_cap_solves"] = config.hard_cap_solves;
    echo["single_interval"] = config.model_options.single_interval;
    std::vector<std::string> ablated;
    for (ConstraintTag tag : config.model_options.ablated) ablated.push_back(tag_name(tag));
    echo["ablated"] = ablated;
    manifest.config_echo = echo.dump();
  }
  manifest.created_utc = utc_now();

  namespace fs = std::filesystem;
  BalancerResult result;
  try {
    result = run_balancer(expanded, config, solver);
  } catch (const BalancerAbort& abort) {
    fs::create_directories(args.out_dir);
    std::string log;
    for (const IterationRecord& record : abort.partial_log) log += iteration_record_line(record);
    write_file((fs::path(args.out_dir) / "iterations.jsonl").string(), log);
    throw;
  }
  if (result.hard_cap_fired)
    std::fprintf(stderr, "warning: hard solve cap (%d) fired before the loop's own exit\n",
                 config.hard_cap_solves);

  const SavedSolution& chosen = result.solutions[result.chosen_index];
  const ValidationReport validation =
      validate_schedule(expanded.instance, expanded.registry, chosen.schedule,
                        args.strict_containment);
  MetricsReport metrics = chosen.metrics;
  metrics.flagged_invalid = !validation.overall_valid();

  SolutionDoc doc;
  doc.manifest_hash = manifest.hash();
  doc.instance_label = instance.label;
  doc.instance_sha256 = manifest.instance_sha256;
  doc.backend = backend;
  doc.status = to_string(chosen.status);
  doc.objective = chosen.objective;
  doc.chosen_iteration = result.chosen_index;
  doc.iterations_total = static_cast<int>(result.solutions.size());
  doc.schedule = chosen.schedule;

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);
  write_file((out / "solution.json").string(), serialize_solution(doc));
  write_file((out / "metrics.json").string(),
             serialize_metrics(metrics, doc.manifest_hash, validation.valid_fraction));
  write_file((out / "validation.json").string(), serialize_validation(validation, chosen.schedule));
  write_file((out / "manifest.json").string(), manifest.to_json().dump(2) + "\n");
  std::string log;
  for (const IterationRecord& record : result.log) log += iteration_record_line(record);
  write_file((out / "iterations.jsonl").string(), log);

  std::printf("instance %s: %d solves, kept iteration %d (objective %g, %s)\n",
              instance.label.c_str(), static_cast<int>(result.solutions.size()),
              result.chosen_index, chosen.objective, doc.status.c_str());
  print_summary(metrics, validation.valid_fraction);
  return kExitOk;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path, bool strict) {
  const std::string bytes = read_file(instance_path);
  const SolutionDoc doc = load_solution(solution_path);
  if (!doc.instance_sha256.empty() && doc.instance_sha256 != sha256_hex(bytes))
    fail(ErrorKind::usage, "solution was produced from a different instance (hash mismatch); "
                           "refusing to validate a stale pair");
  const ExpandedInstance expanded = expand_splits(parse_instance(bytes));
  const ValidationReport report =
      validate_schedule(expanded.instance, expanded.registry, doc.schedule, strict);
  std::fputs(serialize_validation(report, doc.schedule).c_str(), stdout);
  std::printf("%.1f%% valid tracks%s\n", report.valid_fraction,
              report.empty_schedule ? " (empty schedule)" : "");
  return report.overall_valid() ? kExitOk : kExitInvalid;
}

int cmd_metrics(const std::string& instance_path, const std::string& solution_path,
                const std::string& prioritize, const std::string& out_path) {
  const std::string bytes = read_file(instance_path);
  const SolutionDoc doc = load_solution(solution_path);
  if (!doc.instance_sha256.empty() && doc.instance_sha256 != sha256_hex(bytes))
    fail(ErrorKind::usage, "solution/instance hash mismatch");
  const ProblemInstance instance = parse_instance(bytes);
  const ExpandedInstance expanded = expand_splits(instance);
  const ValidationReport validation =
      validate_schedule(expanded.instance, expanded.registry, doc.schedule);
  MetricsReport metrics = compute_metrics(instance, expanded.registry, doc.schedule,
                                          parse_mission_list(prioritize, instance));
  metrics.flagged_invalid = !validation.overall_valid();
  print_summary(metrics, validation.valid_fraction);
  if (!out_path.empty())
    write_file(out_path, serialize_metrics(metrics, doc.manifest_hash, validation.valid_fraction));
  return kExitOk;
}

int cmd_export_mps(const std::string& instance_path, const std::string& out_path,
                   bool single_interval, const std::string& ablate, const std::string& prioritize,
                   double priority_weight) {
  const ProblemInstance instance = parse_instance(read_file(instance_path));
  const ExpandedInstance expanded = expand_splits(instance);
  BalancerConfig config;
  config.prioritized_missions = parse_mission_list(prioritize, instance);
  config.priority_multiplier = priority_weight;
  ModelOptions options;
  options.single_interval = single_interval;
  options.ablated = parse_ablation(ablate);
  const MilpModel model = build_model(expanded, initial_weights(expanded, config), options);
  write_file(out_path, export_mps(model));
  const ModelCounts counts = count_model(model);
  std::printf("wrote %s: %ld binaries (%ld dense), %ld rows\n", out_path.c_str(),
              counts.n_binaries, counts.n_binaries_dense, counts.n_rows);
  for (const auto& [tag, count] : counts.rows_by_tag) std::printf("  %-16s %ld\n", tag.c_str(), count);
  for (const std::string& warning : model.warnings) std::fprintf(stderr, "warning: %s\n", warning.c_str());
  return kExitOk;
}

int cmd_generate(const std::string& spec_path, long seed, const std::string& out_path) {
  const GeneratorSpec spec = load_generator_spec(spec_path);
  const ProblemInstance instance = generate_synthetic(spec, static_cast<std::uint64_t>(seed));
  write_file(out_path, serialize_instance(instance));
  const InstanceSummary s = summarize(instance);
  std::printf("wrote %s: %d resources, %d activities, %ld requested hours, %d missions\n",
              out_path.c_str(), s.n_resources, s.n_activities, s.requested_hours, s.n_missions);
  return kExitOk;
}

int cmd_report(const std::string& solution_path, const std::string& kind,
               const std::string& instance_path, const std::string& out_path) {
  const SolutionDoc doc = load_solution(solution_path);
  std::string csv;
  if (kind == "gantt") {
    csv = gantt_csv(doc.schedule, doc.manifest_hash);
  } else if (kind == "heatmap" || kind == "usage") {
    if (instance_path.empty())
      fail(ErrorKind::usage, kind + " reports need --instance (maintenance and axis data)");
    const std::string bytes = read_file(instance_path);
    if (!doc.instance_sha256.empty() && doc.instance_sha256 != sha256_hex(bytes))
      fail(ErrorKind::usage, "solution/instance hash mismatch");
    const ProblemInstance instance = parse_instance(bytes);
    csv = kind == "heatmap" ? heatmap_csv(instance, doc.schedule, doc.manifest_hash)
                            : usage_csv(instance, doc.schedule, doc.manifest_hash);
  } else {
    fail(ErrorKind::usage, "unknown report kind `" + kind + "` (gantt, heatmap, usage)");
  }
  if (out_path.empty()) std::fputs(csv.c_str(), stdout);
  else write_file(out_path, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antenna network scheduler: time-indexed 0/1 program with splitting, "
               "fairness rebalancing and an independent schedule validator"};
  app.require_subcommand(1);

  ScheduleArgs sched;
  CLI::App* schedule = app.add_subcommand("schedule", "run the full scheduling loop");
  schedule->add_option("instance", sched.instance_path)->required();
  schedule->add_option("-o,--out", sched.out_dir, "output directory");
  schedule->add_option("--solver", sched.solver,
                       "`oracle` or a command template with {mps} {sol} {time_limit_s} "
                       "(default: $ANTSCHED_SOLVER, then oracle)");
  schedule->add_option("--time-limit", sched.time_limit, "per-solve budget, seconds");
  schedule->add_option("--iterations", sched.iterations, "k_max");
  schedule->add_option("--threshold", sched.threshold, "initial satisfaction threshold");
  schedule->add_option("--threshold-increment", sched.threshold_increment);
  schedule->add_option("--prioritize", sched.prioritize, "comma-separated mission ids");
  schedule->add_option("--priority-weight", sched.priority_weight);
  schedule->add_option("--seed", sched.seed, "recorded in the manifest");
  schedule->add_option("--hard-cap", sched.hard_cap, "absolute cap on solves");
  schedule->add_option("--oracle-max-vars", sched.oracle_max_vars);
  schedule->add_flag("--strict-containment", sched.strict_containment);
  schedule->add_flag("--single-interval", sched.single_interval);
  schedule->add_option("--ablate", sched.ablate, "drop constraint families (e.g. 2j,2k-2m)");

  std::string v_instance, v_solution;
  bool v_strict = false;
  CLI::App* validate = app.add_subcommand("validate", "re-check a solution against the rules");
  validate->add_option("instance", v_instance)->required();
  validate->add_option("solution", v_solution)->required();
  validate->add_flag("--strict-containment", v_strict);

  std::string m_instance, m_solution, m_prioritize, m_out;
  CLI::App* metrics = app.add_subcommand("metrics", "satisfaction metrics for a solution");
  metrics->add_option("instance", m_instance)->required();
  metrics->add_option("solution", m_solution)->required();
  metrics->add_option("--prioritize", m_prioritize);
  metrics->add_option("-o,--out", m_out);

  std::string e_instance, e_out = "model.mps", e_ablate, e_prioritize;
  bool e_single = false;
  double e_weight = 5.0;
  CLI::App* export_mps_cmd = app.add_subcommand("export-mps", "write the 0/1 program as MPS");
  export_mps_cmd->add_option("instance", e_instance)->required();
  export_mps_cmd->add_option("-o,--out", e_out);
  export_mps_cmd->add_flag("--single-interval", e_single);
  export_mps_cmd->add_option("--ablate", e_ablate);
  export_mps_cmd->add_option("--prioritize", e_prioritize);
  export_mps_cmd->add_option("--priority-weight", e_weight);

  std::string g_spec, g_out = "instance.json";
  long g_seed = 0;
  CLI::App* generate = app.add_subcommand("generate", "synthesize an instance from profiles");
  generate->add_option("--spec", g_spec)->required();
  generate->add_option("--seed", g_seed);
  generate->add_option("-o,--out", g_out);

  std::string r_solution, r_kind, r_instance, r_out;
  CLI::App* report = app.add_subcommand("report", "emit gantt/heatmap/usage CSV");
  report->add_option("solution", r_solution)->required();
  report->add_option("--kind", r_kind)->required();
  report->add_option("--instance", r_instance);
  report->add_option("-o,--out", r_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (schedule->parsed()) return cmd_schedule(sched);
    if (validate->parsed()) return cmd_validate(v_instance, v_solution, v_strict);
    if (metrics->parsed()) return cmd_metrics(m_instance, m_solution, m_prioritize, m_out);
    if (export_mps_cmd->parsed())
      return cmd_export_mps(e_instance, e_out, e_single, e_ablate, e_prioritize, e_weight);
    if (generate->parsed()) return cmd_generate(g_spec, g_seed, g_out);
    if (report->parsed()) return cmd_report(r_solution, r_kind, r_instance, r_out);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBackend;
  }
  return kExitUsage;
}
