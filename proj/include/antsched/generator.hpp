#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "antsched/instance.hpp"

namespace antsched {

// Per-mission averages, one table row per mission.
struct MissionProfile {
  std::string mission_id;
  double t_r_hours = 0.0;       // total requested tracking time
  int n_a = 0;                  // number of activities
  double d_min_avg_h = 0.0;
  double d_max_avg_h = 0.0;
  double setup_avg_min = 0.0;
  double teardown_avg_min = 0.0;
  std::vector<std::string> allowed_resources;  // empty means any
};

struct GeneratorSpec {
  std::string label;
  TimeGrid grid;
  std::vector<Resource> resources;
  std::map<std::string, std::array<int, 7>> availability;  // resource -> per-day view-period capacity
  std::vector<MissionProfile> profiles;
  int vps_per_activity = 2;
  int window_margin_slots = 4;
};

GeneratorSpec parse_generator_spec(const std::string& json_text);
GeneratorSpec load_generator_spec(const std::string& path);

// Deterministic synthetic instance: per mission exactly n_a activities whose
// slot-quantized totals hit the profile sums exactly (remainder spread one
// slot each over the last activities) and whose per-mission means match the
// averages within one slot quantum. View periods are per-day windows long
// enough to host the request, drawn from the availability capacities.
ProblemInstance generate_synthetic(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace antsched
