#pragma once

#include <string>
#include <vector>

#include "antsched/instance.hpp"

namespace antsched {

// One scheduled track: contiguous setup, tracking and teardown intervals on
// the resources of a single view period. setup.end == track.start and
// track.end == teardown.start always hold.
struct Track {
  std::string activity_id;
  std::string parent_id;  // split parent, or activity_id itself when unsplit
  std::string mission_id;
  std::string vp_id;
  std::vector<std::string> resource_ids;
  Interval setup;
  Interval track;
  Interval teardown;

  Interval span() const { return {setup.start, teardown.end}; }
  auto operator<=>(const Track&) const = default;
};

struct Schedule {
  std::vector<Track> tracks;           // sorted by (vp_id, track.start)
  std::vector<std::string> completed;  // activity ids with x = 1, sorted

  bool operator==(const Schedule&) const = default;
};

}  // namespace antsched
