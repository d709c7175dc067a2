#include <doctest.h>

#include <cmath>
#include <memory>

#include "antsched/balance.hpp"
#include "antsched/error.hpp"
#include "antsched/json_io.hpp"
#include "support.hpp"

using namespace antsched;
using antsched::testing::expanded_of;
using antsched::testing::micro_instance;

TEST_SUITE_BEGIN("balance");

namespace {

// Mission MA: activity a, 2 h firm. Mission MB: activity b, 2..3 h.
// Windows are disjoint, so "a only" and "a plus b" are both feasible.
ExpandedInstance harness_instance() {
  return expanded_of(micro_instance(8, 60, {"R1"},
                                    {{"a", "MA", 2, 2}, {"b", "MB", 2, 3}},
                                    {{"a", {"R1"}, {{0, 2}}}, {"b", {"R1"}, {{4, 7}}}}));
}

Schedule schedule_a_only(const ExpandedInstance& ex) {
  const MilpModel model = build_model(ex, uniform_weights(ex.instance));
  std::vector<std::uint8_t> values(model.vars.size(), 0);
  values[model.vars.x_of[0]] = 1;
  values[model.vars.find(VarKind::track, 0, 0)] = 1;
  values[model.vars.find(VarKind::track, 0, 1)] = 1;
  values[model.vars.find(VarKind::start, 0, 0)] = 1;
  values[model.vars.find(VarKind::end, 0, 2)] = 1;
  return extract_schedule(model, values);
}

Schedule schedule_both(const ExpandedInstance& ex) {
  const MilpModel model = build_model(ex, uniform_weights(ex.instance));
  std::vector<std::uint8_t> values = schedule_to_assignment(model, schedule_a_only(ex));
  values[model.vars.x_of[1]] = 1;
  values[model.vars.find(VarKind::track, 1, 4)] = 1;
  values[model.vars.find(VarKind::track, 1, 5)] = 1;
  values[model.vars.find(VarKind::start, 1, 4)] = 1;
  values[model.vars.find(VarKind::end, 1, 6)] = 1;
  return extract_schedule(model, values);
}

// Replays a fixed sequence of schedules regardless of weights.
SolverFn scripted_solver(const ExpandedInstance& ex, std::vector<Schedule> script) {
  auto calls = std::make_shared<size_t>(0);
  return [&ex, script = std::move(script), calls](const MilpModel& model, double) {
    REQUIRE(*calls < script.size());
    Assignment a;
    a.values = schedule_to_assignment(model, script[(*calls)++]);
    a.objective = recompute_objective(model, a.values);
    a.status = SolveStatus::optimal;
    return a;
  };
}

}  // namespace

TEST_CASE("weight doubling applies strictly below the threshold") {
  const ExpandedInstance ex = harness_instance();
  Weights weights = uniform_weights(ex.instance);

  const auto doubled = update_weights(weights, ex, {{"MA", 0.10}, {"MB", 0.90}}, 0.15);
  CHECK(doubled == std::vector<std::string>{"MA"});
  CHECK(weights.c1[0] == 2.0);
  CHECK(weights.c2[0] == 2.0);  // a's view period
  CHECK(weights.c1[1] == 1.0);
  CHECK(weights.c2[1] == 1.0);

  // boundary: exactly at the threshold stays untouched
  Weights at_boundary = uniform_weights(ex.instance);
  CHECK(update_weights(at_boundary, ex, {{"MA", 0.15}, {"MB", 0.15}}, 0.15).empty());
  CHECK(at_boundary.c1[0] == 1.0);

  // two below-threshold rounds compose to x4
  const auto again = update_weights(weights, ex, {{"MA", 0.10}, {"MB", 0.90}}, 0.15);
  CHECK(again == std::vector<std::string>{"MA"});
  CHECK(weights.c1[0] == 4.0);
  CHECK(weights.c2[0] == 4.0);
}

TEST_CASE("selection distance and argmin") {
  MetricsReport a;
  a.u_rms = 0.3;
  a.u_max = 0.5;
  a.u_avg = 0.8;
  CHECK(std::abs(selection_distance(a, false) - 1.3793114224133720) < 1e-9);

  MetricsReport b;
  b.u_rms = 0.2;
  b.u_max = 0.4;
  b.u_avg = 0.9;
  CHECK(std::abs(selection_distance(b, false) - 1.1977344869521658) < 1e-9);
  CHECK(select_best({a, b}, false) == 1);
  CHECK(select_best({a}, false) == 0);
  CHECK(select_best({a, a}, false) == 0);  // ties break to the earliest

  MetricsReport starved;  // nothing satisfied: infinite distance
  starved.u_rms = 1.0;
  starved.u_max = 1.0;
  starved.u_avg = 0.0;
  CHECK(std::isinf(selection_distance(starved, false)));
  CHECK(select_best({starved, b}, false) == 1);
  CHECK(select_best({starved, starved}, false) == 0);

  // prioritized selection requires u_prio
  MetricsReport prio = b;
  prio.u_prio = 0.5;
  CHECK(selection_distance(prio, true) ==
        doctest::Approx(std::sqrt(0.04 + 0.16 + 1.0 / 0.81 + 4.0)));
  CHECK(std::isinf(selection_distance(b, true)));  // missing u_prio
  CHECK_THROWS_AS(select_best({}, false), Error);
}

TEST_CASE("prioritized missions start with boosted activity weights") {
  const ExpandedInstance ex = harness_instance();
  BalancerConfig config;
  config.prioritized_missions = {"MB"};
  const Weights weights = initial_weights(ex, config);
  CHECK(weights.c1[0] == 1.0);
  CHECK(weights.c1[1] == 5.0);
  CHECK(weights.c2[0] == 1.0);
  CHECK(weights.c2[1] == 1.0);  // only c1 carries the priority boost
}

TEST_CASE("the loop's observable trace matches a hand simulation") {
  const ExpandedInstance ex = harness_instance();
  const Schedule only_a = schedule_a_only(ex);
  const Schedule both = schedule_both(ex);

  BalancerConfig config;
  config.eta0 = 0.15;
  config.incr_threshold = 0.05;
  config.k_max = 3;
  config.k_time_s = 100.0;
  config.hard_cap_solves = 20;

  const BalancerResult result =
      run_balancer(ex, config, scripted_solver(ex, {only_a, only_a, both, only_a, both}));

  REQUIRE(result.log.size() == 5);
  REQUIRE(result.solutions.size() == 5);
  CHECK_FALSE(result.hard_cap_fired);

  // solve 0: MA satisfied 1.0, MB 0 -> double MB; no escalation, no repeat.
  CHECK(result.log[0].k_before == 0);
  CHECK(result.log[0].threshold_before == doctest::Approx(0.15));
  CHECK(result.log[0].k_time_s == doctest::Approx(100.0));
  CHECK(result.log[0].doubled_missions == std::vector<std::string>{"MB"});
  CHECK(result.log[0].threshold_escalations == 0);
  CHECK_FALSE(result.log[0].solution_repeated);
  CHECK(result.log[0].k_after == 1);

  // solve 1: same solution again -> double MB again, k_time doubles, k resets.
  CHECK(result.log[1].k_before == 1);
  CHECK(result.log[1].doubled_missions == std::vector<std::string>{"MB"});
  CHECK(result.log[1].solution_repeated);
  CHECK(result.log[1].k_after == 1);

  // solve 2: both scheduled (MB at 2/3) -> threshold escalates 0.15..0.70.
  CHECK(result.log[2].k_time_s == doctest::Approx(200.0));
  CHECK(result.log[2].doubled_missions.empty());
  CHECK(result.log[2].threshold_escalations == 11);
  CHECK(result.log[2].threshold_after == doctest::Approx(0.70));
  CHECK_FALSE(result.log[2].solution_repeated);
  CHECK(result.log[2].k_after == 1);

  // solve 3: back to only_a -> MB (0 < 0.70) doubled; no escalation, no repeat.
  CHECK(result.log[3].k_before == 1);
  CHECK(result.log[3].doubled_missions == std::vector<std::string>{"MB"});
  CHECK(result.log[3].threshold_escalations == 0);
  CHECK_FALSE(result.log[3].solution_repeated);
  CHECK(result.log[3].k_after == 2);

  // solve 4: both again; 2/3 < 0.70 so MB doubles once more; k hits k_max.
  CHECK(result.log[4].k_before == 2);
  CHECK(result.log[4].doubled_missions == std::vector<std::string>{"MB"});
  CHECK(result.log[4].threshold_escalations == 0);
  CHECK_FALSE(result.log[4].solution_repeated);  // previous was only_a
  CHECK(result.log[4].k_after == 3);

  // weight snapshots are the weights used per solve: 1, 2, 4, 4, 8 for MB.
  const std::vector<double> expected_b_weights = {1, 2, 4, 4, 8};
  for (size_t i = 0; i < result.solutions.size(); ++i) {
    CHECK(result.solutions[i].weights.c1[1] == expected_b_weights[i]);
    CHECK(result.solutions[i].weights.c1[0] == 1.0);  // MA never doubled
  }

  // the chosen solution is the first "both" iteration (2 and 4 tie).
  CHECK(result.chosen_index == 2);
  CHECK(std::abs(result.solutions[2].metrics.u_rms - 0.2357022603955158) < 1e-9);
  CHECK(result.solutions[2].metrics.u_avg == doctest::Approx(0.8333333333333333));
}

TEST_CASE("identical solutions forever trip the hard cap, loudly") {
  const ExpandedInstance ex = harness_instance();
  const Schedule only_a = schedule_a_only(ex);
  BalancerConfig config;
  config.k_max = 3;
  config.k_time_s = 10.0;
  config.hard_cap_solves = 6;
  const BalancerResult result = run_balancer(
      ex, config, scripted_solver(ex, std::vector<Schedule>(6, only_a)));
  CHECK(result.hard_cap_fired);
  CHECK(result.log.size() == 6);
  // k_time kept doubling: 10, 10, 20, 40, 80, 160
  CHECK(result.log[5].k_time_s == doctest::Approx(160.0));
}

TEST_CASE("solver errors abort with context and the partial log") {
  const ExpandedInstance ex = harness_instance();
  int calls = 0;
  const SolverFn flaky = [&](const MilpModel& model, double) {
    Assignment a;
    if (calls++ == 0) {
      a.values = schedule_to_assignment(model, schedule_a_only(ex));
      a.objective = recompute_objective(model, a.values);
      a.status = SolveStatus::optimal;
    } else {
      a.status = SolveStatus::error;
      a.diagnostics = "boom";
    }
    return a;
  };
  BalancerConfig config;
  try {
    run_balancer(ex, config, flaky);
    FAIL("expected an abort");
  } catch (const BalancerAbort& abort) {
    CHECK(std::string(abort.what()).find("boom") != std::string::npos);
    CHECK(abort.partial_log.size() == 2);  // one good solve, one failed
    CHECK(abort.partial_log[1].status == SolveStatus::error);
  }
}

TEST_CASE("iteration records serialize as line-delimited JSON") {
  const ExpandedInstance ex = harness_instance();
  BalancerConfig config;
  config.k_max = 1;
  const BalancerResult result =
      run_balancer(ex, config, scripted_solver(ex, {schedule_both(ex)}));
  REQUIRE(result.log.size() == 1);
  const std::string line = iteration_record_line(result.log[0]);
  CHECK(line.back() == '\n');
  const nlohmann::json record = nlohmann::json::parse(line);
  CHECK(record["k"] == 0);
  CHECK(record["threshold"] == doctest::Approx(0.15));
  CHECK(record["k_time_s"] == doctest::Approx(1800.0));
  CHECK(record["satisfaction"]["MB"] == doctest::Approx(2.0 / 3.0));
  CHECK(record.contains("u_rms"));
  CHECK(record.contains("distance"));
  CHECK(record.contains("objective"));
}

TEST_CASE("configuration is validated up front") {
  BalancerConfig config;
  config.eta0 = 1.5;
  CHECK_THROWS_AS(config.validate(), Error);
  config = {};
  config.k_max = 0;
  CHECK_THROWS_AS(config.validate(), Error);
  config = {};
  config.priority_multiplier = 0.5;
  CHECK_THROWS_AS(config.validate(), Error);
}

TEST_SUITE_END();
