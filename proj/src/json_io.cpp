#include "antsched/json_io.hpp"

#include <fstream>
#include <sstream>

#include "antsched/error.hpp"
#include "antsched/sha256.hpp"

namespace antsched {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::parse, path + " is missing `" + key + "`");
  return *it;
}

std::vector<Interval> parse_intervals(const json& j, const std::string& path) {
  std::vector<Interval> out;
  if (!j.is_array()) fail(ErrorKind::parse, path + " must be an array of [start, end) pairs");
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      fail(ErrorKind::parse, path + " must contain [start, end) slot pairs");
    out.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return out;
}

ordered_json intervals_json(const std::vector<Interval>& intervals) {
  ordered_json out = ordered_json::array();
  for (const Interval& iv : intervals) out.push_back({iv.start, iv.end});
  return out;
}

}  // namespace

ProblemInstance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("instance document: ") + e.what());
  }

  ProblemInstance inst;
  inst.label = field(doc, "label", "instance").get<std::string>();
  const json& grid = field(doc, "grid", "instance");
  inst.grid = build_time_grid(field(grid, "week_start", "grid").get<std::string>(),
                              field(grid, "slot_minutes", "grid").get<int>());

  for (const json& r : field(doc, "resources", "instance")) {
    Resource resource;
    resource.id = field(r, "id", "resource").get<std::string>();
    resource.complex = r.value("complex", "");
    resource.diameter_m = r.value("diameter_m", 34);
    if (r.contains("maintenance"))
      resource.maintenance = parse_intervals(r["maintenance"], "resource " + resource.id);
    inst.resources.push_back(std::move(resource));
  }
  for (const json& m : field(doc, "missions", "instance"))
    inst.missions.push_back({field(m, "id", "mission").get<std::string>(), {}});

  for (const json& v : field(doc, "view_periods", "instance")) {
    ViewPeriod vp;
    vp.id = field(v, "id", "view period").get<std::string>();
    for (const json& rid : field(v, "resources", "view period " + vp.id))
      vp.resource_ids.push_back(rid.get<std::string>());
    vp.windows = parse_intervals(field(v, "windows", "view period " + vp.id), "view period " + vp.id);
    inst.view_periods.push_back(std::move(vp));
  }

  for (const json& a : field(doc, "activities", "instance")) {
    Activity act;
    act.id = field(a, "id", "activity").get<std::string>();
    act.mission_id = field(a, "mission", "activity " + act.id).get<std::string>();
    act.d_min_slots = hours_to_slots(field(a, "d_min_h", "activity " + act.id).get<double>(), inst.grid);
    act.d_max_slots = hours_to_slots(field(a, "d_max_h", "activity " + act.id).get<double>(), inst.grid);
    act.setup_slots = to_slots(field(a, "setup_min", "activity " + act.id).get<long>(), inst.grid);
    act.teardown_slots =
        to_slots(field(a, "teardown_min", "activity " + act.id).get<long>(), inst.grid);
    act.min_up_slots = a.value("min_up_slots", 0);
    act.min_down_slots = a.value("min_down_slots", 0);
    act.splittable = a.value("splittable", true);
    for (const json& vid : field(a, "view_periods", "activity " + act.id))
      act.view_period_ids.push_back(vid.get<std::string>());
    inst.activities.push_back(std::move(act));
  }

  inst.finalize();
  return inst;
}

ProblemInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string serialize_instance(const ProblemInstance& inst) {
  ordered_json doc;
  doc["label"] = inst.label;
  doc["grid"] = {{"slot_minutes", inst.grid.slot_minutes}, {"week_start", inst.grid.week_start}};
  doc["resources"] = ordered_json::array();
  for (const Resource& r : inst.resources) {
    ordered_json jr;
    jr["id"] = r.id;
    jr["complex"] = r.complex;
    jr["diameter_m"] = r.diameter_m;
    if (!r.maintenance.empty()) jr["maintenance"] = intervals_json(r.maintenance);
    doc["resources"].push_back(std::move(jr));
  }
  doc["missions"] = ordered_json::array();
  for (const Mission& m : inst.missions) doc["missions"].push_back({{"id", m.id}});
  doc["activities"] = ordered_json::array();
  for (const Activity& a : inst.activities) {
    ordered_json ja;
    ja["id"] = a.id;
    ja["mission"] = a.mission_id;
    ja["d_min_h"] = inst.grid.slots_to_hours(a.d_min_slots);
    ja["d_max_h"] = inst.grid.slots_to_hours(a.d_max_slots);
    ja["setup_min"] = static_cast<long>(a.setup_slots) * inst.grid.slot_minutes;
    ja["teardown_min"] = static_cast<long>(a.teardown_slots) * inst.grid.slot_minutes;
    if (a.min_up_slots != a.d_min_slots) ja["min_up_slots"] = a.min_up_slots;
    if (a.min_down_slots != 0) ja["min_down_slots"] = a.min_down_slots;
    if (!a.splittable) ja["splittable"] = false;
    ja["view_periods"] = a.view_period_ids;
    doc["activities"].push_back(std::move(ja));
  }
  doc["view_periods"] = ordered_json::array();
  for (const ViewPeriod& vp : inst.view_periods) {
    ordered_json jv;
    jv["id"] = vp.id;
    jv["resources"] = vp.resource_ids;
    jv["windows"] = intervals_json(vp.windows);
    doc["view_periods"].push_back(std::move(jv));
  }
  return doc.dump(2) + "\n";
}

std::string RunManifest::hash() const {
  ordered_json j;
  j["instance_label"] = instance_label;
  j["instance_sha256"] = instance_sha256;
  j["backend"] = backend;
  j["seed"] = seed;
  j["config"] = config_echo;
  return sha256_hex(j.dump());
}

ordered_json RunManifest::to_json() const {
  ordered_json j;
  j["manifest_hash"] = hash();
  j["instance_label"] = instance_label;
  j["instance_sha256"] = instance_sha256;
  j["backend"] = backend;
  j["seed"] = seed;
  j["config"] = config_echo;
  j["created_utc"] = created_utc;
  return j;
}

std::string serialize_solution(const SolutionDoc& doc) {
  ordered_json j;
  j["format"] = "antsched-solution";
  j["manifest_hash"] = doc.manifest_hash;
  j["instance_label"] = doc.instance_label;
  j["instance_sha256"] = doc.instance_sha256;
  j["backend"] = doc.backend;
  j["status"] = doc.status;
  j["objective"] = doc.objective;
  j["chosen_iteration"] = doc.chosen_iteration;
  j["iterations_total"] = doc.iterations_total;
  j["completed"] = doc.schedule.completed;
  j["tracks"] = ordered_json::array();
  for (const Track& t : doc.schedule.tracks) {
    ordered_json jt;
    jt["activity"] = t.activity_id;
    jt["parent"] = t.parent_id;
    jt["mission"] = t.mission_id;
    jt["view_period"] = t.vp_id;
    jt["resources"] = t.resource_ids;
    jt["setup"] = {t.setup.start, t.setup.end};
    jt["track"] = {t.track.start, t.track.end};
    jt["teardown"] = {t.teardown.start, t.teardown.end};
    j["tracks"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

SolutionDoc parse_solution(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("solution document: ") + e.what());
  }
  if (j.value("format", "") != "antsched-solution")
    fail(ErrorKind::parse, "solution document has wrong `format`");
  SolutionDoc doc;
  doc.manifest_hash = j.value("manifest_hash", "");
  doc.instance_label = j.value("instance_label", "");
  doc.instance_sha256 = j.value("instance_sha256", "");
  doc.backend = j.value("backend", "");
  doc.status = j.value("status", "");
  doc.objective = j.value("objective", 0.0);
  doc.chosen_iteration = j.value("chosen_iteration", 0);
  doc.iterations_total = j.value("iterations_total", 1);
  for (const json& id : field(j, "completed", "solution"))
    doc.schedule.completed.push_back(id.get<std::string>());
  for (const json& jt : field(j, "tracks", "solution")) {
    Track t;
    t.activity_id = field(jt, "activity", "track").get<std::string>();
    t.parent_id = jt.value("parent", t.activity_id);
    t.mission_id = field(jt, "mission", "track").get<std::string>();
    t.vp_id = field(jt, "view_period", "track").get<std::string>();
    for (const json& rid : field(jt, "resources", "track")) t.resource_ids.push_back(rid.get<std::string>());
    auto interval = [&](const char* key) {
      const json& p = field(jt, key, "track");
      if (!p.is_array() || p.size() != 2) fail(ErrorKind::parse, std::string("track `") + key + "` must be [start, end)");
      return Interval{p[0].get<int>(), p[1].get<int>()};
    };
    t.setup = interval("setup");
    t.track = interval("track");
    t.teardown = interval("teardown");
    doc.schedule.tracks.push_back(std::move(t));
  }
  return doc;
}

SolutionDoc load_solution(const std::string& path) { return parse_solution(read_file(path)); }

std::string serialize_metrics(const MetricsReport& report, const std::string& manifest_hash,
                              double valid_tracks_pct) {
  ordered_json j;
  j["manifest_hash"] = manifest_hash;
  j["valid_tracks_pct"] = valid_tracks_pct;
  j["hours_satisfied"] = report.hours_satisfied;
  j["satisfied_time_fraction_pct"] = report.satisfied_time_fraction * 100.0;
  j["n_requests"] = report.n_requests;
  j["n_satisfied_requests"] = report.n_satisfied_requests;
  j["satisfied_request_fraction_pct"] = report.satisfied_request_fraction * 100.0;
  j["avg_satisfied_ratio_pct"] = report.u_avg * 100.0;
  j["u_rms"] = report.u_rms;
  j["u_max_pct"] = report.u_max * 100.0;
  if (report.u_prio) j["u_prio_pct"] = *report.u_prio * 100.0;
  if (std::isfinite(report.distance)) j["distance"] = report.distance;
  else j["distance"] = nullptr;
  j["flagged_invalid"] = report.flagged_invalid;
  j["per_mission"] = ordered_json::array();
  for (const MissionStat& stat : report.per_mission)
    j["per_mission"].push_back({{"mission", stat.mission_id},
                                {"t_s_h", stat.t_s_hours},
                                {"t_r_h", stat.t_r_hours},
                                {"ratio", stat.ratio}});
  j["zero_request_missions"] = report.zero_request_missions;
  return j.dump(2) + "\n";
}

std::string serialize_validation(const ValidationReport& report, const Schedule& schedule) {
  ordered_json j;
  j["valid_tracks_pct"] = report.valid_fraction;
  j["empty_schedule"] = report.empty_schedule;
  j["overall_valid"] = report.overall_valid();
  j["tracks"] = ordered_json::array();
  for (const TrackVerdict& verdict : report.verdicts) {
    ordered_json jt;
    const Track& t = schedule.tracks[verdict.track_index];
    jt["index"] = verdict.track_index;
    jt["activity"] = t.activity_id;
    jt["view_period"] = t.vp_id;
    jt["violations"] = ordered_json::array();
    for (RuleTag tag : verdict.violations) jt["violations"].push_back(to_string(tag));
    j["tracks"].push_back(std::move(jt));
  }
  j["global_violations"] = report.global_violations;
  return j.dump(2) + "\n";
}

std::string iteration_record_line(const IterationRecord& r) {
  ordered_json j;
  j["solve"] = r.solve_index;
  j["k"] = r.k_before;
  j["threshold"] = r.threshold_before;
  j["k_time_s"] = r.k_time_s;
  j["status"] = to_string(r.status);
  j["objective"] = r.objective;
  j["satisfaction"] = r.satisfaction;
  j["u_rms"] = r.u_rms;
  j["u_max"] = r.u_max;
  j["u_avg"] = r.u_avg;
  if (r.u_prio) j["u_prio"] = *r.u_prio;
  if (std::isfinite(r.distance)) j["distance"] = r.distance;
  else j["distance"] = nullptr;
  j["doubled_missions"] = r.doubled_missions;
  j["threshold_escalations"] = r.threshold_escalations;
  j["solution_repeated"] = r.solution_repeated;
  j["threshold_after"] = r.threshold_after;
  j["k_after"] = r.k_after;
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::usage, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) fail(ErrorKind::usage, "cannot write " + path);
}

}  // namespace antsched
