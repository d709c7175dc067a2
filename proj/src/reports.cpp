#include "antsched/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace antsched {

namespace {

std::string hours(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace

std::vector<UsageRow> usage_rows(const ProblemInstance& instance, const Schedule& schedule) {
  const int horizon = instance.horizon();
  std::vector<UsageRow> rows;
  rows.reserve(instance.resources.size());
  for (const Resource& resource : instance.resources) {
    std::vector<char> occupied(horizon, 0);
    for (const Track& track : schedule.tracks) {
      if (std::find(track.resource_ids.begin(), track.resource_ids.end(), resource.id) ==
          track.resource_ids.end())
        continue;
      const Interval span = track.span();
      for (int t = std::max(0, span.start); t < std::min(horizon, span.end); ++t) occupied[t] = 1;
    }
    long comm = 0, maint = 0;
    for (int t = 0; t < horizon; ++t) {
      if (resource.in_maintenance(t)) ++maint;
      else if (occupied[t]) ++comm;
    }
    UsageRow row;
    row.resource_id = resource.id;
    row.communication_h = instance.grid.slots_to_hours(comm);
    row.maintenance_h = instance.grid.slots_to_hours(maint);
    row.available_h = instance.grid.slots_to_hours(horizon - comm - maint);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string gantt_csv(const Schedule& schedule, const std::string& manifest_hash) {
  std::ostringstream out;
  out << "# manifest " << manifest_hash << "\n";
  out << "resource,mission,activity,setup_start,track_start,track_end,teardown_end\n";
  std::vector<std::pair<std::string, const Track*>> rows;
  for (const Track& track : schedule.tracks)
    for (const std::string& rid : track.resource_ids) rows.emplace_back(rid, &track);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second->setup.start, a.second->activity_id) <
           std::tie(b.first, b.second->setup.start, b.second->activity_id);
  });
  for (const auto& [rid, track] : rows)
    out << rid << ',' << track->mission_id << ',' << track->activity_id << ','
        << track->setup.start << ',' << track->track.start << ',' << track->track.end << ','
        << track->teardown.end << "\n";
  return out.str();
}

std::string heatmap_csv(const ProblemInstance& instance, const Schedule& schedule,
                        const std::string& manifest_hash) {
  std::map<std::string, std::map<std::string, long>> slots;  // mission -> resource -> tracked slots
  for (const Track& track : schedule.tracks)
    for (const std::string& rid : track.resource_ids)
      slots[track.mission_id][rid] += track.track.length();

  std::ostringstream out;
  out << "# manifest " << manifest_hash << "\n";
  out << "mission";
  for (const Resource& r : instance.resources) out << ',' << r.id;
  out << "\n";
  for (const Mission& mission : instance.missions) {
    out << mission.id;
    for (const Resource& r : instance.resources) {
      long tracked = 0;
      if (auto m = slots.find(mission.id); m != slots.end())
        if (auto c = m->second.find(r.id); c != m->second.end()) tracked = c->second;
      out << ',' << hours(instance.grid.slots_to_hours(tracked));
    }
    out << "\n";
  }
  return out.str();
}

std::string usage_csv(const ProblemInstance& instance, const Schedule& schedule,
                      const std::string& manifest_hash) {
  std::ostringstream out;
  out << "# manifest " << manifest_hash << "\n";
  out << "resource,communication_h,available_h,maintenance_h\n";
  for (const UsageRow& row : usage_rows(instance, schedule))
    out << row.resource_id << ',' << hours(row.communication_h) << ',' << hours(row.available_h)
        << ',' << hours(row.maintenance_h) << "\n";
  return out.str();
}

}  // namespace antsched
