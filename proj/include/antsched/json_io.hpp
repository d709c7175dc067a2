#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "antsched/balance.hpp"
#include "antsched/evaluate.hpp"
#include "antsched/instance.hpp"
#include "antsched/schedule.hpp"

namespace antsched {

// Canonical instance document. Slot indices are integers, tracking durations
// decimal hours, setup/teardown minutes.
ProblemInstance parse_instance(const std::string& json_text);
ProblemInstance load_instance(const std::string& path);
std::string serialize_instance(const ProblemInstance& instance);

struct RunManifest {
  std::string instance_label;
  std::string instance_sha256;
  std::string backend;
  long seed = 0;
  std::string config_echo;  // compact JSON of the effective configuration
  std::string created_utc;  // only field excluded from the hash

  std::string hash() const;
  nlohmann::ordered_json to_json() const;
};

struct SolutionDoc {
  std::string manifest_hash;
  std::string instance_label;
  std::string instance_sha256;
  std::string backend;
  std::string status;
  double objective = 0.0;
  int chosen_iteration = 0;
  int iterations_total = 1;
  Schedule schedule;
};

std::string serialize_solution(const SolutionDoc& doc);
SolutionDoc parse_solution(const std::string& json_text);
SolutionDoc load_solution(const std::string& path);

std::string serialize_metrics(const MetricsReport& report, const std::string& manifest_hash,
                              double valid_tracks_pct);
std::string serialize_validation(const ValidationReport& report, const Schedule& schedule);

// One line-delimited JSON record per solve, for the iteration log.
std::string iteration_record_line(const IterationRecord& record);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace antsched
