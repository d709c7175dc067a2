#include "antsched/generator.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

#include "antsched/error.hpp"
#include "antsched/json_io.hpp"

namespace antsched {

using nlohmann::json;

namespace {

// splitmix64; self-contained so generated fixtures are stable across
// platforms and standard-library versions.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// total split into n parts: base everywhere, one extra slot for each of the
// last (total mod n) parts.
std::vector<int> distribute(long total, int n) {
  std::vector<int> parts(n, static_cast<int>(total / n));
  const int rem = static_cast<int>(total % n);
  for (int i = n - rem; i < n; ++i) ++parts[i];
  return parts;
}

long round_to_units(double value, double unit, const std::string& what) {
  const double units = value / unit;
  const long rounded = std::lround(units);
  if (rounded < 0) fail(ErrorKind::generation, what + " is negative");
  return rounded;
}

std::string pad2(int i) { return i < 10 ? "0" + std::to_string(i) : std::to_string(i); }

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("generator spec: ") + e.what());
  }
  GeneratorSpec spec;
  spec.label = doc.value("label", "synthetic");
  if (!doc.contains("grid")) fail(ErrorKind::parse, "generator spec is missing `grid`");
  spec.grid = build_time_grid(doc["grid"].value("week_start", "1970-01-05T00:00:00Z"),
                              doc["grid"].value("slot_minutes", 15));
  if (!doc.contains("resources")) fail(ErrorKind::parse, "generator spec is missing `resources`");
  for (const json& r : doc["resources"]) {
    Resource resource;
    resource.id = r.at("id").get<std::string>();
    resource.complex = r.value("complex", "");
    resource.diameter_m = r.value("diameter_m", 34);
    if (r.contains("maintenance"))
      for (const json& pair : r["maintenance"])
        resource.maintenance.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    spec.resources.push_back(std::move(resource));
  }
  if (doc.contains("availability"))
    for (const auto& [rid, counts] : doc["availability"].items()) {
      std::array<int, 7> days{};
      if (!counts.is_array() || counts.size() != 7)
        fail(ErrorKind::parse, "availability for " + rid + " must list 7 per-day counts");
      for (int d = 0; d < 7; ++d) days[d] = counts[d].get<int>();
      spec.availability.emplace(rid, days);
    }
  spec.vps_per_activity = doc.value("vps_per_activity", 2);
  spec.window_margin_slots = doc.value("window_margin_slots", 4);
  if (!doc.contains("profiles")) fail(ErrorKind::parse, "generator spec is missing `profiles`");
  for (const json& p : doc["profiles"]) {
    MissionProfile profile;
    profile.mission_id = p.at("mission").get<std::string>();
    profile.t_r_hours = p.at("t_r_h").get<double>();
    profile.n_a = p.at("n_a").get<int>();
    profile.d_min_avg_h = p.at("d_min_avg_h").get<double>();
    profile.d_max_avg_h = p.at("d_max_avg_h").get<double>();
    profile.setup_avg_min = p.at("setup_avg_min").get<double>();
    profile.teardown_avg_min = p.at("teardown_avg_min").get<double>();
    if (p.contains("resources"))
      for (const json& rid : p["resources"]) profile.allowed_resources.push_back(rid.get<std::string>());
    spec.profiles.push_back(std::move(profile));
  }
  return spec;
}

GeneratorSpec load_generator_spec(const std::string& path) {
  return parse_generator_spec(read_file(path));
}

ProblemInstance generate_synthetic(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.profiles.empty()) fail(ErrorKind::generation, "no mission profiles given");
  const double slot_hours = spec.grid.slot_minutes / 60.0;
  const int day_slots = 24 * 60 / spec.grid.slot_minutes;

  ProblemInstance inst;
  inst.grid = spec.grid;
  inst.label = spec.label;
  inst.resources = spec.resources;

  // Remaining per-(resource, day) view-period capacity. Resources without an
  // availability row get unbounded capacity.
  std::map<std::pair<int, int>, int> capacity;
  for (size_t r = 0; r < spec.resources.size(); ++r) {
    auto it = spec.availability.find(spec.resources[r].id);
    for (int d = 0; d < 7; ++d)
      capacity[{static_cast<int>(r), d}] =
          it == spec.availability.end() ? spec.profiles.size() * 1000 : it->second[d];
  }

  Rng rng{seed};
  for (const MissionProfile& profile : spec.profiles) {
    if (profile.n_a < 1) fail(ErrorKind::generation, profile.mission_id + " has no activities");
    if (profile.d_min_avg_h > profile.d_max_avg_h)
      fail(ErrorKind::generation, profile.mission_id + " has d_min above d_max");
    inst.missions.push_back({profile.mission_id, {}});

    const long dmax_total = round_to_units(profile.t_r_hours, slot_hours, profile.mission_id + " T_R");
    const long dmin_total =
        round_to_units(profile.n_a * profile.d_min_avg_h, slot_hours, profile.mission_id + " d_min");
    if (dmin_total > dmax_total)
      fail(ErrorKind::generation, profile.mission_id + ": minimum durations (" +
                                      std::to_string(dmin_total) + " slots) exceed T_R (" +
                                      std::to_string(dmax_total) + " slots)");
    if (dmin_total < profile.n_a)
      fail(ErrorKind::generation, profile.mission_id + ": some activity would request zero slots");
    const std::vector<int> d_min = distribute(dmin_total, profile.n_a);
    const std::vector<int> d_max = distribute(dmax_total, profile.n_a);
    const std::vector<int> setup = distribute(
        round_to_units(profile.n_a * profile.setup_avg_min, spec.grid.slot_minutes,
                       profile.mission_id + " setup"),
        profile.n_a);
    const std::vector<int> teardown = distribute(
        round_to_units(profile.n_a * profile.teardown_avg_min, spec.grid.slot_minutes,
                       profile.mission_id + " teardown"),
        profile.n_a);

    std::vector<int> allowed;
    if (profile.allowed_resources.empty()) {
      for (size_t r = 0; r < spec.resources.size(); ++r) allowed.push_back(static_cast<int>(r));
    } else {
      for (const std::string& rid : profile.allowed_resources) {
        auto it = std::find_if(spec.resources.begin(), spec.resources.end(),
                               [&](const Resource& r) { return r.id == rid; });
        if (it == spec.resources.end())
          fail(ErrorKind::generation, profile.mission_id + " allows unknown resource " + rid);
        allowed.push_back(static_cast<int>(it - spec.resources.begin()));
      }
    }

    const int split_threshold = 8 * 60 / spec.grid.slot_minutes;
    for (int i = 0; i < profile.n_a; ++i) {
      Activity act;
      act.id = profile.mission_id + "-" + pad2(i + 1);
      act.mission_id = profile.mission_id;
      act.d_min_slots = d_min[i];
      act.d_max_slots = d_max[i];
      act.setup_slots = setup[i];
      act.teardown_slots = teardown[i];
      // Long requests whose halves would not land on whole slots are kept
      // whole-only instead of tripping the splitter's quantization guard.
      if (act.d_max_slots >= split_threshold &&
          (act.d_max_slots % 2 != 0 ||
           (act.d_min_slots > split_threshold && act.d_min_slots % 2 != 0)))
        act.splittable = false;

      const int want_len =
          std::min(day_slots, act.d_max_slots + act.setup_slots + act.teardown_slots +
                                  spec.window_margin_slots);
      std::vector<int> used_days;
      for (int k = 0; k < spec.vps_per_activity; ++k) {
        // Prefer days this activity does not use yet; any remaining capacity otherwise.
        std::vector<std::pair<int, int>> fresh, any;
        for (int r : allowed)
          for (int d = 0; d < 7; ++d) {
            if (capacity[{r, d}] <= 0) continue;
            any.emplace_back(r, d);
            if (std::find(used_days.begin(), used_days.end(), d) == used_days.end())
              fresh.emplace_back(r, d);
          }
        const auto& pool = fresh.empty() ? any : fresh;
        if (pool.empty())
          fail(ErrorKind::generation,
               profile.mission_id + ": view-period availability exhausted for " + act.id);
        const auto [r, d] = pool[rng.below(static_cast<int>(pool.size()))];
        --capacity[{r, d}];
        used_days.push_back(d);

        const int offset = rng.below(day_slots - want_len + 1);
        ViewPeriod vp;
        vp.id = act.id + "-vp" + std::to_string(k);
        vp.resource_ids = {spec.resources[r].id};
        vp.windows = {{d * day_slots + offset, d * day_slots + offset + want_len}};
        act.view_period_ids.push_back(vp.id);
        inst.view_periods.push_back(std::move(vp));
      }
      inst.activities.push_back(std::move(act));
    }
  }

  inst.finalize();
  return inst;
}

}  // namespace antsched
