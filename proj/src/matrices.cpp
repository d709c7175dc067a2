#include "antsched/matrices.hpp"

#include <vector>

namespace antsched {

MatrixBundle assemble_matrices(const ProblemInstance& instance) {
  const int n_r = static_cast<int>(instance.resources.size());
  const int n_a = static_cast<int>(instance.activities.size());
  const int n_m = static_cast<int>(instance.missions.size());
  const int n_v = static_cast<int>(instance.view_periods.size());
  const int n_t = instance.horizon();

  using Triplet = Eigen::Triplet<int>;
  std::vector<Triplet> r_entries, a_entries, m_entries, v_entries;

  for (int v = 0; v < n_v; ++v) {
    const ViewPeriod& vp = instance.view_periods[v];
    for (const std::string& rid : vp.resource_ids)
      r_entries.emplace_back(instance.resource_index.at(rid), v, 1);
    a_entries.emplace_back(instance.vp_owner[v], v, 1);

    for (const Interval& w : vp.windows) {
      for (int t = w.start; t < w.end; ++t) {
        bool blocked = false;
        for (const std::string& rid : vp.resource_ids) {
          if (instance.resources[instance.resource_index.at(rid)].in_maintenance(t)) {
            blocked = true;
            break;
          }
        }
        if (!blocked) v_entries.emplace_back(v, t, 1);
      }
    }
  }
  for (int a = 0; a < n_a; ++a)
    m_entries.emplace_back(instance.mission_index.at(instance.activities[a].mission_id), a, 1);

  MatrixBundle bundle;
  bundle.R.resize(n_r, n_v);
  bundle.A.resize(n_a, n_v);
  bundle.M.resize(n_m, n_a);
  bundle.V.resize(n_v, n_t);
  bundle.R.setFromTriplets(r_entries.begin(), r_entries.end());
  bundle.A.setFromTriplets(a_entries.begin(), a_entries.end());
  bundle.M.setFromTriplets(m_entries.begin(), m_entries.end());
  bundle.V.setFromTriplets(v_entries.begin(), v_entries.end());
  return bundle;
}

}  // namespace antsched
