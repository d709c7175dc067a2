#pragma once

#include <string>

namespace antsched {

// One scheduling week discretized into fixed-length slots. All durations and
// window boundaries elsewhere in the engine are slot indices into this grid;
// wall-clock time appears only at I/O boundaries.
struct TimeGrid {
  int slot_minutes = 15;
  int horizon_slots = 672;          // 7*24*60 / slot_minutes for a standard week
  std::string week_start;           // UTC timestamp of slot 0, e.g. "2016-10-31T00:00:00Z"

  double slots_to_hours(long slots) const { return static_cast<double>(slots) * slot_minutes / 60.0; }
};

// Builds a standard-week grid. slot_minutes must be one of {1, 5, 15, 30, 60}.
TimeGrid build_time_grid(const std::string& week_start_utc, int slot_minutes);

// Converts a duration in minutes to whole slots; never rounds.
int to_slots(long duration_minutes, const TimeGrid& grid);

// Converts a duration in (decimal) hours to whole slots; never rounds.
int hours_to_slots(double hours, const TimeGrid& grid);

}  // namespace antsched
