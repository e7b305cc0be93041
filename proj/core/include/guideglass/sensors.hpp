#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guideglass/geometry.hpp"

namespace guideglass {

/// Ultrasonic rangefinder model. Trigger is a >= 10 us high pulse; the sensor then
/// emits 8 cycles at 40 kHz. Neither is emulated, only the echo timing.
struct UltrasonicConfig
{
  double v_sound{340.0};      // m/s
  double min_range{0.03};     // m
  double max_range{4.25};     // m
  double half_fov{deg_to_rad(7.5)};
  double echo_timeout{0.030};  // s; Echo stays high past this when nothing reflects

  void validate() const;
};

/// A range measurement, or the "no object" sentinel reported on echo timeout.
class UltrasonicReading
{
public:
  static UltrasonicReading max_range() { return UltrasonicReading{}; }
  static UltrasonicReading at(double meters) { return UltrasonicReading{meters}; }

  bool is_max_range() const { return !distance_.has_value(); }
  /// Finite distance; throws std::logic_error on the sentinel.
  double distance() const;
  /// True when the reading is farther than threshold (the sentinel always is).
  bool farther_than(double threshold) const { return is_max_range() || *distance_ > threshold; }
  /// Value written to logs: the distance, or max_range + 1 m for the sentinel.
  double serialized_m(const UltrasonicConfig & cfg) const;

  friend bool operator==(const UltrasonicReading &, const UltrasonicReading &) = default;

private:
  UltrasonicReading() = default;
  explicit UltrasonicReading(double d) : distance_(d) {}

  std::optional<double> distance_;
};

/// d = v * ToF / 2. Throws std::invalid_argument for negative ToF.
double tof_to_distance(double tof_s, const UltrasonicConfig & cfg);

/// Converts an Echo pulse width into a reading: no pulse, a pulse at or beyond the
/// timeout, or a distance past max_range give the sentinel; short echoes clamp
/// to min_range.
UltrasonicReading echo_to_reading(std::optional<double> echo_s, const UltrasonicConfig & cfg);

/// Inverse of tof_to_distance; used to synthesise echo logs.
double distance_to_echo(double meters, const UltrasonicConfig & cfg);

/// One line of an ultrasonic replay log: "frame,echo_ms" with an empty echo
/// field for a timeout.
struct UltrasonicLogEntry
{
  int frame{0};
  std::optional<double> echo_ms;
};

/// Parses a whole log. A first line starting with a non-digit is taken as a header.
/// Throws std::invalid_argument on malformed lines.
std::vector<UltrasonicLogEntry> parse_ultrasonic_log(std::string_view text);
std::string format_ultrasonic_log(const std::vector<UltrasonicLogEntry> & entries);

}  // namespace guideglass
