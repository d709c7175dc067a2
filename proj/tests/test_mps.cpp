#include <doctest.h>

#include "antsched/error.hpp"
#include "antsched/milp.hpp"
#include "antsched/mps.hpp"
#include "support.hpp"

using namespace antsched;
using antsched::testing::expanded_of;
using antsched::testing::micro_corpus;
using antsched::testing::micro_instance;

TEST_SUITE_BEGIN("mps");

namespace {

// model equality through the parser's eyes
void check_round_trip(const MilpModel& model) {
  const std::string text = export_mps(model);
  const ParsedMps mps = parse_mps(text);
  CHECK(mps.maximize);
  CHECK(mps.objective_row == "OBJ");
  REQUIRE(mps.rows.size() == model.rows.size());
  for (size_t r = 0; r < model.rows.size(); ++r) {
    CHECK(mps.rows[r].name == model.rows[r].name);
    CHECK(mps.rows[r].sense == (model.rows[r].rel == Relation::eq ? 'E' : 'L'));
    CHECK(mps.rows[r].rhs == static_cast<double>(model.rows[r].rhs));
  }
  REQUIRE(static_cast<int>(mps.columns.size()) == model.vars.size());
  REQUIRE(mps.binaries == mps.columns);
  for (int var = 0; var < model.vars.size(); ++var)
    CHECK(mps.columns[var] == model.vars.name(var));

  // every term lands in the right cell
  for (size_t r = 0; r < model.rows.size(); ++r)
    for (const auto& [var, coef] : model.rows[r].terms)
      CHECK(mps.entries.at(model.vars.name(var)).at(model.rows[r].name) ==
            static_cast<double>(coef));
  for (int var = 0; var < model.vars.size(); ++var) {
    const auto& col = mps.entries.at(model.vars.name(var));
    if (model.objective[var] != 0.0) CHECK(col.at("OBJ") == model.objective[var]);
  }
}

}  // namespace

TEST_CASE("a one-binary model exports the expected sections") {
  const auto ex =
      expanded_of(micro_instance(8, 60, {"R1"}, {{"a", "MA", 1, 1, 0, 0, 1}},
                                 {{"a", {"R1"}, {{0, 1}}}}));
  const MilpModel model = build_model(ex, uniform_weights(ex.instance));
  const std::string text = export_mps(model);
  CHECK(text.find("NAME") == 0);
  CHECK(text.find("OBJSENSE\n    MAX\n") != std::string::npos);
  CHECK(text.find(" N  OBJ\n") != std::string::npos);
  CHECK(text.find("\nCOLUMNS\n") != std::string::npos);
  CHECK(text.find("\nRHS\n") != std::string::npos);
  CHECK(text.find(" BV BND") != std::string::npos);
  CHECK(text.rfind("ENDATA\n") == text.size() - 7);
  CHECK(text.find("x_a0") != std::string::npos);
}

TEST_CASE("re-export is byte-identical") {
  for (const ExpandedInstance& ex : micro_corpus()) {
    const MilpModel model = build_model(ex, uniform_weights(ex.instance));
    CHECK(export_mps(model) == export_mps(model));
    const MilpModel again = build_model(ex, uniform_weights(ex.instance));
    CHECK(export_mps(model) == export_mps(again));
  }
}

TEST_CASE("exported files re-parse into the same structure") {
  for (const ExpandedInstance& ex : micro_corpus()) {
    const MilpModel model = build_model(ex, uniform_weights(ex.instance));
    check_round_trip(model);
  }
}

TEST_CASE("fractional weights survive the round trip") {
  const auto ex =
      expanded_of(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}}, {{"a", {"R1"}, {{0, 4}}}}));
  Weights weights = uniform_weights(ex.instance);
  weights.c1[0] = 2.5;
  weights.c2[0] = 0.125;
  check_round_trip(build_model(ex, weights));
}

TEST_CASE("solution files parse values, objective, status and comments") {
  const SolutionFile sol = parse_solution_text(
      "# a comment\n"
      "\n"
      "=status= feasible_time_limit\n"
      "=obj= 12.5\n"
      "x_a0 1\n"
      "X_v0_t3 0.9999999\n"
      "* another comment\n");
  CHECK(sol.status == "feasible_time_limit");
  CHECK(sol.has_objective);
  CHECK(sol.objective == 12.5);
  CHECK(sol.values.at("x_a0") == 1.0);
  CHECK(sol.values.at("X_v0_t3") == doctest::Approx(0.9999999));
}

TEST_CASE("malformed solution lines are rejected") {
  CHECK_THROWS_AS(parse_solution_text("x_a0\n"), Error);
  CHECK_THROWS_AS(parse_solution_text("x_a0 one\n"), Error);
  CHECK_THROWS_AS(parse_solution_text("x_a0 1 extra\n"), Error);
  CHECK_THROWS_AS(parse_solution_text("x_a0 1\nx_a0 0\n"), Error);
}

TEST_CASE("the reader rejects what the writer never emits") {
  CHECK_THROWS_AS(parse_mps("ROWS\n L  r1\nENDATA\n"), Error);              // no objective
  CHECK_THROWS_AS(parse_mps("ROWS\n N  OBJ\n X  r1\nENDATA\n"), Error);     // bad sense
  CHECK_THROWS_AS(parse_mps("ROWS\n N  OBJ\nRANGES\n R  x 1\nENDATA\n"), Error);
}

TEST_SUITE_END();
