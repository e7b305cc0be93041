#include "guideglass/sensors.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace guideglass {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view field, const char * what)
{
  const std::string copy(field);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (copy.empty() || used != copy.size()) {
    throw std::invalid_argument(std::string("ultrasonic log: bad ") + what + " '" + copy + "'");
  }
  return value;
}

}  // namespace

void UltrasonicConfig::validate() const
{
  if (!(v_sound > 0.0)) {
    throw std::invalid_argument("ultrasonic: speed of sound must be positive");
  }
  if (!(min_range > 0.0 && min_range < max_range)) {
    throw std::invalid_argument("ultrasonic: need 0 < min_range < max_range");
  }
  if (!(half_fov > 0.0)) {
    throw std::invalid_argument("ultrasonic: half field of view must be positive");
  }
  if (!(echo_timeout > 0.0)) {
    throw std::invalid_argument("ultrasonic: echo timeout must be positive");
  }
}

double UltrasonicReading::distance() const
{
  if (!distance_) {
    throw std::logic_error("ultrasonic reading is the max-range sentinel");
  }
  return *distance_;
}

double UltrasonicReading::serialized_m(const UltrasonicConfig & cfg) const
{
  return distance_ ? *distance_ : cfg.max_range + 1.0;
}

double tof_to_distance(double tof_s, const UltrasonicConfig & cfg)
{
  if (!(tof_s >= 0.0)) {
    throw std::invalid_argument("tof_to_distance: time of flight must be non-negative");
  }
  return cfg.v_sound * tof_s / 2.0;
}

double distance_to_echo(double meters, const UltrasonicConfig & cfg)
{
  return 2.0 * meters / cfg.v_sound;
}

UltrasonicReading echo_to_reading(std::optional<double> echo_s, const UltrasonicConfig & cfg)
{
  if (!echo_s || !(*echo_s >= 0.0) || *echo_s >= cfg.echo_timeout) {
    return UltrasonicReading::max_range();
  }
  const double d = tof_to_distance(*echo_s, cfg);
  if (d > cfg.max_range) {
    return UltrasonicReading::max_range();
  }
  if (d < cfg.min_range) {
    return UltrasonicReading::at(cfg.min_range);
  }
  return UltrasonicReading::at(d);
}

std::vector<UltrasonicLogEntry> parse_ultrasonic_log(std::string_view text)
{
  std::vector<UltrasonicLogEntry> entries;
  bool first = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (first && !std::isdigit(static_cast<unsigned char>(line.front()))) {
      first = false;
      continue;
    }
    first = false;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("ultrasonic log line " + std::to_string(line_no) + ": expected 'frame,echo_ms'");
    }
    UltrasonicLogEntry entry;
    const double frame = parse_double(trim(line.substr(0, comma)), "frame");
    entry.frame = static_cast<int>(frame);
    if (static_cast<double>(entry.frame) != frame || entry.frame < 0) {
      throw std::invalid_argument("ultrasonic log line " + std::to_string(line_no) + ": frame must be a non-negative integer");
    }
    const std::string_view echo = trim(line.substr(comma + 1));
    if (!echo.empty()) {
      entry.echo_ms = parse_double(echo, "echo_ms");
      if (*entry.echo_ms < 0.0) {
        throw std::invalid_argument("ultrasonic log line " + std::to_string(line_no) + ": negative echo");
      }
    }
    entries.push_back(entry);
  }
  return entries;
}

std::string format_ultrasonic_log(const std::vector<UltrasonicLogEntry> & entries)
{
  std::string out = "frame,echo_ms\n";
  char buf[64];
  for (const auto & e : entries) {
    out += std::to_string(e.frame);
    out.push_back(',');
    if (e.echo_ms) {
      std::snprintf(buf, sizeof(buf), "%.6g", *e.echo_ms);
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace guideglass
