#pragma once

#include <string>
#include <vector>

#include "antsched/instance.hpp"
#include "antsched/schedule.hpp"

namespace antsched {

struct UsageRow {
  std::string resource_id;
  double communication_h = 0.0;  // occupied by setup/track/teardown, outside maintenance
  double available_h = 0.0;      // idle, outside maintenance
  double maintenance_h = 0.0;

  double total_h() const { return communication_h + available_h + maintenance_h; }
};

// Per-antenna hour accounting. Each slot is counted exactly once, with
// precedence maintenance > communication > available, so the three columns
// sum to the week length for every antenna.
std::vector<UsageRow> usage_rows(const ProblemInstance& instance, const Schedule& schedule);

// CSV emitters. Every file starts with a `# manifest <hash>` comment line,
// then a header row. Slot columns are slot indices; hour columns decimals.
std::string gantt_csv(const Schedule& schedule, const std::string& manifest_hash);
std::string heatmap_csv(const ProblemInstance& instance, const Schedule& schedule,
                        const std::string& manifest_hash);
std::string usage_csv(const ProblemInstance& instance, const Schedule& schedule,
                      const std::string& manifest_hash);

}  // namespace antsched
