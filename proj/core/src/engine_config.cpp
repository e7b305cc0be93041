#include "guideglass/engine_config.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace guideglass {

namespace {

double parse_double(std::string_view key, std::string_view text)
{
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("override " + std::string(key) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text)
{
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("override " + std::string(key) + ": not an integer: '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text)
{
  if (text == "true" || text == "1" || text == "on") {
    return true;
  }
  if (text == "false" || text == "0" || text == "off") {
    return false;
  }
  throw std::invalid_argument("override " + std::string(key) + ": not a boolean: '" + std::string(text) + "'");
}

using Setter = std::function<void(EngineConfig &, std::string_view key, std::string_view value)>;

template <typename F>
Setter number(F field)
{
  return [field](EngineConfig & c, std::string_view k, std::string_view v) { field(c) = parse_double(k, v); };
}

template <typename F>
Setter degrees(F field)
{
  return [field](EngineConfig & c, std::string_view k, std::string_view v) {
    field(c) = deg_to_rad(parse_double(k, v));
  };
}

template <typename F>
Setter integer(F field)
{
  return [field](EngineConfig & c, std::string_view k, std::string_view v) { field(c) = parse_int(k, v); };
}

template <typename F>
Setter boolean(F field)
{
  return [field](EngineConfig & c, std::string_view k, std::string_view v) { field(c) = parse_bool(k, v); };
}

#define GG_FIELD(expr) [](EngineConfig & c) -> auto & { return c.expr; }

const std::map<std::string, Setter, std::less<>> & setters()
{
  static const std::map<std::string, Setter, std::less<>> table{
    {"camera.f", number(GG_FIELD(pipeline.camera.f))},
    {"camera.u0", number(GG_FIELD(pipeline.camera.u0))},
    {"camera.v0", number(GG_FIELD(pipeline.camera.v0))},
    {"camera.width", integer(GG_FIELD(pipeline.camera.width))},
    {"camera.height", integer(GG_FIELD(pipeline.camera.height))},
    {"wayfinding.width_m", number(GG_FIELD(pipeline.wayfinding.width_m))},
    {"wayfinding.epsilon", number(GG_FIELD(pipeline.wayfinding.epsilon))},
    {"wayfinding.delta", number(GG_FIELD(pipeline.wayfinding.delta))},
    {"wayfinding.run_of", integer(GG_FIELD(pipeline.wayfinding.run_of))},
    {"fusion.lambda", number(GG_FIELD(pipeline.fusion.lambda))},
    {"fusion.mu", number(GG_FIELD(pipeline.fusion.mu))},
    {"fusion.ultra_half_fov_deg", degrees(GG_FIELD(pipeline.fusion.ultra_half_fov))},
    {"fusion.delta", number(GG_FIELD(pipeline.fusion.delta))},
    {"fusion.enabled", boolean(GG_FIELD(pipeline.fusion_enabled))},
    {"ultrasonic.v_sound", number(GG_FIELD(ultrasonic.v_sound))},
    {"ultrasonic.min_range", number(GG_FIELD(ultrasonic.min_range))},
    {"ultrasonic.max_range", number(GG_FIELD(ultrasonic.max_range))},
    {"ultrasonic.half_fov_deg", degrees(GG_FIELD(ultrasonic.half_fov))},
    {"ultrasonic.echo_timeout", number(GG_FIELD(ultrasonic.echo_timeout))},
    {"depth.min_depth", number(GG_FIELD(depth.min_depth))},
    {"depth.max_depth", number(GG_FIELD(depth.max_depth))},
    {"depth.noise", boolean(GG_FIELD(depth.noise_enabled))},
    {"depth.noise_amplitude", number(GG_FIELD(depth.noise_amplitude))},
    {"depth.scan_row", integer(GG_FIELD(depth.scan_row))},
    {"cue.fov_deg", degrees(GG_FIELD(pipeline.cues.fov))},
    {"cue.mid_half_deg", degrees(GG_FIELD(pipeline.cues.mid_half))},
    {"cue.lookahead_m", number(GG_FIELD(cue_lookahead))},
    {"agent.step_len", number(GG_FIELD(agent.step_len))},
    {"agent.turn_rate_deg", degrees(GG_FIELD(agent.turn_rate))},
    {"agent.scan_rate_deg", degrees(GG_FIELD(agent.scan_rate))},
    {"agent.radius", number(GG_FIELD(agent.radius))},
    {"agent.step_over", number(GG_FIELD(agent.step_over))},
    {"agent.forward_half_deg", degrees(GG_FIELD(agent.forward_half))},
    {"agent.homing_rate_deg", degrees(GG_FIELD(agent.homing_rate))},
    {"agent.homing_delay", integer(GG_FIELD(agent.homing_delay))},
    {"agent.goal_radius", number(GG_FIELD(agent.goal_radius))},
    {"agent.frame_dt", number(GG_FIELD(agent.frame_dt))},
    {"limits.max_steps", integer(GG_FIELD(limits.max_steps))},
    {"delta",
     [](EngineConfig & c, std::string_view k, std::string_view v) {
       const double d = parse_double(k, v);
       c.pipeline.wayfinding.delta = d;
       c.pipeline.fusion.delta = d;
     }},
  };
  return table;
}

#undef GG_FIELD

}  // namespace

void EngineConfig::validate() const
{
  pipeline.validate();
  ultrasonic.validate();
  depth.validate();
  agent.validate();
  if (limits.max_steps < 1) {
    throw std::invalid_argument("limits.max_steps must be at least 1");
  }
  if (!(cue_lookahead > 0.0)) {
    throw std::invalid_argument("cue.lookahead_m must be positive");
  }
}

void EngineConfig::apply_override(std::string_view key, std::string_view value)
{
  const auto it = setters().find(key);
  if (it == setters().end()) {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
  it->second(*this, key, value);
}

void EngineConfig::apply_assignment(std::string_view assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::invalid_argument("expected key=value, got '" + std::string(assignment) + "'");
  }
  apply_override(assignment.substr(0, eq), assignment.substr(eq + 1));
}

const std::vector<std::string> & EngineConfig::override_keys()
{
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto & [k, _] : setters()) {
      out.push_back(k);
    }
    return out;
  }();
  return keys;
}

}  // namespace guideglass
