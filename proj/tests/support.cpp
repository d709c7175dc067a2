#include "support.hpp"

namespace antsched::testing {

// 1-hour slots keep every request far below the split threshold; windows are
// a handful of slots so the pruned models stay within the oracle budget.
std::vector<ExpandedInstance> micro_corpus() {
  std::vector<ExpandedInstance> corpus;
  auto add = [&corpus](const ProblemInstance& inst) { corpus.push_back(expand_splits(inst)); };

  // Single activity, varying placement freedom.
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}}, {{"a", {"R1"}, {{0, 6}}}}, "m01"));
  add(micro_instance(10, 60, {"R1"}, {{"a", "MA", 2, 2}}, {{"a", {"R1"}, {{2, 8}}}}, "m02"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 1, 3, 0, 0, 1}}, {{"a", {"R1"}, {{0, 6}}}}, "m03"));

  // Setup/teardown shapes.
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2, 1, 1}}, {{"a", {"R1"}, {{0, 5}}}}, "m04"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2, 2, 0}}, {{"a", {"R1"}, {{0, 6}}}}, "m05"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2, 0, 2}}, {{"a", {"R1"}, {{0, 5}}}}, "m06"));
  add(micro_instance(10, 60, {"R1"}, {{"a", "MA", 1, 1, 1, 0}}, {{"a", {"R1"}, {{0, 2}}}}, "m07"));

  // Two activities: mission non-overlap vs resource contention vs adjacency.
  add(micro_instance(8, 60, {"R1", "R2"}, {{"a", "MA", 2, 2}, {"b", "MA", 2, 2}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R2"}, {{1, 4}}}}, "m08"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}, {"b", "MB", 2, 2}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R1"}, {{1, 4}}}}, "m09"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}, {"b", "MA", 2, 2}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R1"}, {{3, 6}}}}, "m10"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}, {"b", "MB", 2, 2}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R1"}, {{3, 6}}}}, "m11"));

  // Antenna arraying: one view period occupying two resources.
  add(micro_instance(8, 60, {"R1", "R2"}, {{"a", "MA", 3, 3}}, {{"a", {"R1", "R2"}, {{0, 6}}}},
                     "m12"));
  add(micro_instance(8, 60, {"R1", "R2"}, {{"a", "MA", 2, 2}, {"b", "MB", 2, 2}},
                     {{"a", {"R1", "R2"}, {{0, 3}}}, {"b", {"R2"}, {{1, 4}}}}, "m13"));

  // Two windows in one view period; explicit min-up/min-down overrides.
  add(micro_instance(10, 60, {"R1"}, {{"a", "MA", 2, 2}}, {{"a", {"R1"}, {{0, 3}, {5, 8}}}}, "m14"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 4, 0, 0, 2, 2}}, {{"a", {"R1"}, {{0, 7}}}},
                     "m15"));

  // Head-to-head contention for prioritization checks.
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}, {"b", "MB", 2, 2}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R1"}, {{0, 3}}}}, "m16"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 1, 1, 0, 0, 1}, {"b", "MB", 1, 1, 0, 0, 1}},
                     {{"a", {"R1"}, {{0, 2}}}, {"b", {"R1"}, {{0, 2}}}}, "m17"));

  // Maintenance carving a hole in the window.
  {
    ProblemInstance inst = micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2}},
                                          {{"a", {"R1"}, {{0, 6}}}}, "m18");
    inst.resources[0].maintenance = {{2, 4}};
    inst.finalize();
    add(inst);
  }

  // Three requests sharing a day.
  add(micro_instance(8, 60, {"R1"},
                     {{"a", "MA", 1, 1, 0, 0, 1}, {"b", "MA", 1, 1, 0, 0, 1}, {"c", "MA", 1, 1, 0, 0, 1}},
                     {{"a", {"R1"}, {{0, 2}}}, {"b", {"R1"}, {{2, 4}}}, {"c", {"R1"}, {{4, 6}}}},
                     "m19"));
  add(micro_instance(8, 60, {"R1", "R2"},
                     {{"a", "MA", 2, 2}, {"b", "MB", 1, 2, 0, 0, 1}, {"c", "MB", 1, 1, 0, 0, 1}},
                     {{"a", {"R1"}, {{0, 3}}}, {"b", {"R2"}, {{0, 2}}}, {"c", {"R1"}, {{4, 6}}}},
                     "m20"));

  // Setup pinned against the horizon start and a window flush with the end.
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2, 2, 0}}, {{"a", {"R1"}, {{0, 4}}}}, "m21"));
  add(micro_instance(8, 60, {"R1"}, {{"a", "MA", 2, 2, 0, 1}}, {{"a", {"R1"}, {{4, 8}}}}, "m22"));

  return corpus;
}

}  // namespace antsched::testing
