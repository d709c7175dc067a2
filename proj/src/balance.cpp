#include "antsched/balance.hpp"

#include <algorithm>
#include <limits>

#include "antsched/error.hpp"

namespace antsched {

void BalancerConfig::validate() const {
  if (eta0 <= 0.0 || eta0 >= 1.0) fail(ErrorKind::config, "eta0 must be in (0, 1)");
  if (incr_threshold <= 0.0) fail(ErrorKind::config, "threshold increment must be positive");
  if (k_max < 1) fail(ErrorKind::config, "k_max must be at least 1");
  if (k_time_s <= 0.0) fail(ErrorKind::config, "k_time must be positive");
  if (priority_multiplier < 1.0) fail(ErrorKind::config, "priority multiplier must be at least 1");
  if (hard_cap_solves < 1) fail(ErrorKind::config, "hard cap must be at least 1");
}

Weights initial_weights(const ExpandedInstance& expanded, const BalancerConfig& config) {
  Weights weights = uniform_weights(expanded.instance);
  for (size_t a = 0; a < expanded.instance.activities.size(); ++a)
    if (config.prioritized_missions.contains(expanded.instance.activities[a].mission_id))
      weights.c1[static_cast<Eigen::Index>(a)] = config.priority_multiplier;
  return weights;
}

std::vector<std::string> update_weights(Weights& weights, const ExpandedInstance& expanded,
                                        const std::map<std::string, double>& satisfaction,
                                        double threshold) {
  std::vector<std::string> doubled;
  const ProblemInstance& inst = expanded.instance;
  for (const Mission& mission : inst.missions) {
    auto it = satisfaction.find(mission.id);
    if (it == satisfaction.end() || it->second >= threshold) continue;
    doubled.push_back(mission.id);
    for (const std::string& aid : mission.activity_ids) {
      const int a = inst.activity_index.at(aid);
      weights.c1[a] *= 2.0;
      for (const std::string& vid : inst.activities[a].view_period_ids)
        weights.c2[inst.vp_index.at(vid)] *= 2.0;
    }
  }
  return doubled;
}

int select_best(const std::vector<MetricsReport>& reports, bool prioritized) {
  if (reports.empty()) fail(ErrorKind::model, "no solutions to select from");
  int best = 0;
  double best_distance = selection_distance(reports[0], prioritized);
  for (size_t i = 1; i < reports.size(); ++i) {
    const double d = selection_distance(reports[i], prioritized);
    if (d < best_distance) {
      best = static_cast<int>(i);
      best_distance = d;
    }
  }
  return best;
}

BalancerResult run_balancer(const ExpandedInstance& expanded, const BalancerConfig& config,
                            const SolverFn& solver) {
  config.validate();
  const bool prioritized = !config.prioritized_missions.empty();

  BalancerResult result;
  Weights weights = initial_weights(expanded, config);
  double threshold = config.eta0;
  double k_time = config.k_time_s;
  int k = 0;
  std::optional<Schedule> previous;

  while (k < config.k_max) {
    if (static_cast<int>(result.log.size()) >= config.hard_cap_solves) {
      result.hard_cap_fired = true;
      break;
    }
    IterationRecord record;
    record.solve_index = static_cast<int>(result.log.size());
    record.k_before = k;
    record.threshold_before = threshold;
    record.k_time_s = k_time;

    const MilpModel model = build_model(expanded, weights, config.model_options);
    const Assignment assignment = solver(model, k_time);
    record.status = assignment.status;
    if (assignment.status == SolveStatus::error || assignment.status == SolveStatus::infeasible) {
      result.log.push_back(record);
      const std::string where = result.solutions.empty()
                                    ? "before any solution was saved"
                                    : "at solve " + std::to_string(record.solve_index);
      throw BalancerAbort("solver failed " + where + ": " + assignment.diagnostics,
                          std::move(result.log));
    }

    Schedule schedule = extract_schedule(model, assignment.values);
    MetricsReport metrics =
        compute_metrics(expanded.instance, expanded.registry, schedule, config.prioritized_missions);
    record.objective = assignment.objective;
    record.u_rms = metrics.u_rms;
    record.u_max = metrics.u_max;
    record.u_avg = metrics.u_avg;
    record.u_prio = metrics.u_prio;
    record.distance = metrics.distance;
    std::map<std::string, double> satisfaction;
    for (const MissionStat& stat : metrics.per_mission) {
      satisfaction.emplace(stat.mission_id, stat.ratio);
      record.satisfaction.emplace(stat.mission_id, stat.ratio);
    }
    result.solutions.push_back(
        {schedule, std::move(metrics), weights, threshold, assignment.objective, assignment.status});

    record.doubled_missions = update_weights(weights, expanded, satisfaction, threshold);

    double min_satisfaction = std::numeric_limits<double>::infinity();
    for (const auto& [mission, ratio] : satisfaction) min_satisfaction = std::min(min_satisfaction, ratio);
    while (!satisfaction.empty() && min_satisfaction >= threshold) {
      threshold += config.incr_threshold;
      k = 0;
      ++record.threshold_escalations;
    }

    record.solution_repeated = previous.has_value() && schedule == *previous;
    if (record.solution_repeated) {
      k_time *= 2.0;
      k = 0;
    }
    previous = std::move(schedule);

    k += 1;
    record.threshold_after = threshold;
    record.k_after = k;
    result.log.push_back(std::move(record));
  }

  if (result.solutions.empty()) fail(ErrorKind::backend, "balancer saved no solutions");
  std::vector<MetricsReport> reports;
  reports.reserve(result.solutions.size());
  for (const SavedSolution& s : result.solutions) reports.push_back(s.metrics);
  result.chosen_index = select_best(reports, prioritized);
  return result;
}

}  // namespace antsched
