#include <doctest.h>

#include <map>
#include <sstream>

#include "antsched/milp.hpp"
#include "antsched/reports.hpp"
#include "antsched/solve.hpp"
#include "support.hpp"

using namespace antsched;
using antsched::testing::expanded_of;
using antsched::testing::micro_corpus;
using antsched::testing::micro_instance;

TEST_SUITE_BEGIN("reports");

namespace {

ProblemInstance week_instance() {
  ProblemInstance inst = micro_instance(672, 15, {"DSS-43", "DSS-63"},
                                        {{"a", "MA", 8, 8}, {"b", "MB", 8, 8}},
                                        {{"a", {"DSS-43"}, {{0, 32}}}, {"b", {"DSS-63"}, {{0, 32}}}});
  inst.resources[1].maintenance = {{96, 112}};  // 4 h on DSS-63
  inst.finalize();
  return inst;
}

Schedule one_track() {
  Schedule s;
  Track t;
  t.activity_id = t.parent_id = "a";
  t.mission_id = "MA";
  t.vp_id = "a-vp0";
  t.resource_ids = {"DSS-43"};
  t.setup = {0, 0};
  t.track = {0, 8};  // 2 h
  t.teardown = {8, 8};
  s.tracks = {t};
  s.completed = {"a"};
  return s;
}

}  // namespace

TEST_CASE("empty schedule usage: all hours are available or maintenance") {
  const ProblemInstance inst = week_instance();
  const std::vector<UsageRow> rows = usage_rows(inst, Schedule{});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].communication_h == 0.0);
  CHECK(rows[0].available_h == 168.0);
  CHECK(rows[1].maintenance_h == 4.0);
  CHECK(rows[1].available_h == 164.0);
  for (const UsageRow& row : rows) CHECK(row.total_h() == 168.0);
}

TEST_CASE("a single two-hour track lights one heatmap cell") {
  const ProblemInstance inst = week_instance();
  const std::string csv = heatmap_csv(inst, one_track(), "deadbeef");
  std::istringstream in(csv);
  std::string comment, header, row_a, row_b;
  std::getline(in, comment);
  std::getline(in, header);
  std::getline(in, row_a);
  std::getline(in, row_b);
  CHECK(comment == "# manifest deadbeef");
  CHECK(header == "mission,DSS-43,DSS-63");
  CHECK(row_a == "MA,2,0");
  CHECK(row_b == "MB,0,0");
}

TEST_CASE("usage counts setup and teardown as communication, tracking only in heatmap") {
  const ProblemInstance inst = week_instance();
  Schedule s = one_track();
  s.tracks[0].setup = {4, 8};  // shift: setup [4,8), track [8,16), teardown [16,17)
  s.tracks[0].track = {8, 16};
  s.tracks[0].teardown = {16, 17};
  const std::vector<UsageRow> rows = usage_rows(inst, s);
  CHECK(rows[0].communication_h == doctest::Approx(13 * 0.25));  // 4+8+1 slots
  CHECK(rows[0].total_h() == 168.0);
}

TEST_CASE("hours conservation holds on every corpus solution") {
  for (const ExpandedInstance& ex : micro_corpus()) {
    const MilpModel model = build_model(ex, uniform_weights(ex.instance));
    const Schedule schedule = extract_schedule(model, solve_exact_oracle(model).values);
    const double week_h = ex.instance.grid.slots_to_hours(ex.instance.horizon());
    for (const UsageRow& row : usage_rows(ex.instance, schedule))
      CHECK(row.total_h() == week_h);
  }
}

TEST_CASE("gantt rows are per-resource and never overlap") {
  Schedule schedule;
  auto track = [](const std::string& id, const std::string& mission, const std::string& rid,
                  int setup_start, int start, int end, int teardown_end) {
    Track t;
    t.activity_id = t.parent_id = id;
    t.mission_id = mission;
    t.vp_id = id + "-vp0";
    t.resource_ids = {rid};
    t.setup = {setup_start, start};
    t.track = {start, end};
    t.teardown = {end, teardown_end};
    return t;
  };
  schedule.tracks = {track("b", "MB", "DSS-43", 18, 20, 28, 29),
                     track("a", "MA", "DSS-43", 4, 8, 16, 17),
                     track("b2", "MB", "DSS-63", 0, 2, 10, 11)};
  schedule.completed = {"a", "b", "b2"};
  const std::string csv = gantt_csv(schedule, "cafe");

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# manifest cafe");
  std::getline(in, line);
  CHECK(line == "resource,mission,activity,setup_start,track_start,track_end,teardown_end");
  std::map<std::string, long> last_end;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string resource, mission, activity, s0, t0, t1, e1;
    std::getline(fields, resource, ',');
    std::getline(fields, mission, ',');
    std::getline(fields, activity, ',');
    std::getline(fields, s0, ',');
    std::getline(fields, t0, ',');
    std::getline(fields, t1, ',');
    std::getline(fields, e1, ',');
    CHECK(std::stol(s0) >= last_end[resource]);  // sorted and disjoint per resource
    last_end[resource] = std::stol(e1);
  }
  CHECK(rows == 3);
}

TEST_CASE("csv emitters are deterministic") {
  const ProblemInstance inst = week_instance();
  const Schedule s = one_track();
  CHECK(gantt_csv(s, "h") == gantt_csv(s, "h"));
  CHECK(heatmap_csv(inst, s, "h") == heatmap_csv(inst, s, "h"));
  CHECK(usage_csv(inst, s, "h") == usage_csv(inst, s, "h"));
}

TEST_SUITE_END();
