#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "antsched/instance.hpp"
#include "antsched/milp_model.hpp"

namespace antsched {

// One split: the original activity plus its two half-duration clones.
struct SplitTriple {
  std::string parent_id;
  std::string clone_a_id;
  std::string clone_b_id;
};

struct SplitRegistry {
  std::vector<SplitTriple> triples;
  std::unordered_map<std::string, int> by_parent;  // parent id -> triple index
  std::unordered_map<std::string, int> by_clone;   // clone id -> triple index

  bool is_clone(const std::string& activity_id) const { return by_clone.contains(activity_id); }
  const SplitTriple* for_parent(const std::string& activity_id) const;
};

struct ExpandedInstance {
  ProblemInstance instance;  // originals plus clones; passes all instance invariants
  SplitRegistry registry;
};

// Duplicates every splittable activity whose d_max is at least 8 hours into
// two clones with d_max/2 and max(4 h, d_min/2) bounds, cloning its view
// periods under fresh ids. Clones join the parent's mission and are marked
// split-ineligible, so expansion is single-pass.
ExpandedInstance expand_splits(const ProblemInstance& instance);

// The three linkage rows per triple: x' <= x'', x'' <= x', x <= 1 - x'.
// Admits exactly (x, x', x'') in {(0,0,0), (1,0,0), (0,1,1)}.
std::vector<LinearConstraint> xor_constraints(
    const SplitRegistry& registry, const std::unordered_map<std::string, int>& x_var_of_activity);

}  // namespace antsched
