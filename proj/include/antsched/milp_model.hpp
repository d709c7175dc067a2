#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace antsched {

// Variable families of the 0/1 program. `activity` is the per-activity
// completion flag x; the five (view period, slot) families are tracking X,
// its start/end markers, and the setup/teardown occupancy derived from them.
enum class VarKind : std::uint8_t {
  activity,   // x[a]
  track,      // X[v,t]
  start,      // X^(v,t), first tracked slot of a run
  end,        // Xv(v,t), first idle slot after a run
  setup_occ,  // Y^(v,t), slot occupied by setup
  teardown_occ,  // Yv(v,t), slot occupied by teardown
};

struct VarInfo {
  VarKind kind;
  int vp = -1;        // view-period position (families over (v,t))
  int t = -1;         // slot
  int activity = -1;  // activity position (kind == activity)
};

// Dense, stable variable index space for one model. Order: all x by activity
// position, then per view period (ascending) each (v,t) family in slot order.
struct VariableSpace {
  std::vector<VarInfo> vars;
  std::vector<int> x_of;  // activity position -> var id
  std::vector<std::unordered_map<int, int>> track_of, start_of, end_of, setup_of, teardown_of;

  int size() const { return static_cast<int>(vars.size()); }
  // -1 when the variable was pruned away (fixed to zero by construction).
  int find(VarKind kind, int vp, int t) const;
  std::string name(int var) const;
};

enum class ConstraintTag : std::uint8_t {
  c2b,  // tracking only where the view period exists (held by variable pruning)
  c2c,  // run continuity: X[v,t] - X[v,t-1] = start - end
  c2d,  // minimum up time
  c2e,  // minimum down time
  c2f,  // setup occupancy definition
  c2g,  // teardown occupancy definition
  c2h,  // one track per resource per slot
  c2i_min,
  c2i_max,  // tracked slots within [d_min, d_max]·x
  c2j,      // one track per mission per slot, across all antennas
  c2k,
  c2l,
  c2m,              // XOR split linkage
  single_interval,  // optional strict mode: at most one run per view period
};

const char* tag_name(ConstraintTag tag);

enum class Relation : std::uint8_t { le, eq };

// Sparse row: sum(coef * var) rel rhs. Coefficients are integers (slot
// arithmetic), so feasibility checks are exact.
struct LinearConstraint {
  ConstraintTag tag;
  std::string name;
  std::vector<std::pair<int, long>> terms;
  Relation rel = Relation::le;
  long rhs = 0;
};

// Objective weights: c1 per (expanded) activity, c2 per view period.
struct Weights {
  Eigen::VectorXd c1;
  Eigen::VectorXd c2;
};

struct ActivityMeta {
  std::string id;
  std::string mission_id;
  std::string parent_id;  // empty unless the activity is a split clone
  int d_min_slots = 0;
  int d_max_slots = 0;
};

struct VpMeta {
  std::string id;
  int owner = -1;  // activity position
  std::vector<std::string> resource_ids;
  int setup_slots = 0;
  int teardown_slots = 0;
};

struct MilpModel {
  VariableSpace vars;
  std::vector<LinearConstraint> rows;
  Eigen::VectorXd objective;  // per var id; sense is maximize
  int horizon = 0;
  std::vector<ActivityMeta> activities;
  std::vector<VpMeta> vps;
  std::vector<std::string> warnings;  // e.g. structurally unschedulable activities
};

struct ModelCounts {
  long n_binaries = 0;        // variables actually instantiated
  long n_binaries_dense = 0;  // |A| + 5·|V|·|T|, the unpruned variable space
  std::vector<std::pair<std::string, long>> rows_by_tag;
  long n_rows = 0;

  long rows_for(const std::string& tag) const;
};

}  // namespace antsched
