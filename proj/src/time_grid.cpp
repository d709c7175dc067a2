#include "antsched/time_grid.hpp"

#include <cmath>
#include <string>

#include "antsched/error.hpp"

namespace antsched {

TimeGrid build_time_grid(const std::string& week_start_utc, int slot_minutes) {
  switch (slot_minutes) {
    case 1:
    case 5:
    case 15:
    case 30:
    case 60:
      break;
    default:
      fail(ErrorKind::config,
           "slot length " + std::to_string(slot_minutes) + " min is not in {1,5,15,30,60}");
  }
  TimeGrid grid;
  grid.slot_minutes = slot_minutes;
  grid.horizon_slots = 7 * 24 * 60 / slot_minutes;
  grid.week_start = week_start_utc;
  return grid;
}

int to_slots(long duration_minutes, const TimeGrid& grid) {
  if (duration_minutes < 0)
    fail(ErrorKind::quantization, "negative duration " + std::to_string(duration_minutes) + " min");
  if (duration_minutes % grid.slot_minutes != 0)
    fail(ErrorKind::quantization, std::to_string(duration_minutes) + " min is not a multiple of the " +
                                      std::to_string(grid.slot_minutes) + "-min slot");
  return static_cast<int>(duration_minutes / grid.slot_minutes);
}

int hours_to_slots(double hours, const TimeGrid& grid) {
  const double minutes = hours * 60.0;
  const long rounded = std::lround(minutes);
  if (std::abs(minutes - static_cast<double>(rounded)) > 1e-6)
    fail(ErrorKind::quantization, std::to_string(hours) + " h is not a whole number of minutes");
  return to_slots(rounded, grid);
}

}  // namespace antsched
