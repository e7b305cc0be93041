#include "guideglass/cueing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guideglass {

namespace {

double clamp_to_fov(double alpha, const CueRegions & r)
{
  return std::clamp(alpha, -r.fov / 2.0, r.fov / 2.0);
}

SpeechInstruction fill(int index, std::optional<int> deg)
{
  SpeechInstruction s;
  s.template_index = index;
  std::string text(kSpeechTemplates[static_cast<std::size_t>(index)]);
  const std::size_t xx = text.find("xx");
  if (xx != std::string::npos) {
    s.turn_deg = deg.value_or(0);
    text.replace(xx, 2, std::to_string(*s.turn_deg));
  }
  s.text = std::move(text);
  return s;
}

}  // namespace

void CueRegions::validate() const
{
  if (!(mid_half > 0.0 && mid_half < fov / 2.0)) {
    throw std::invalid_argument("cue regions: need 0 < mid_half < fov / 2");
  }
}

Region classify_region(double alpha, const CueRegions & r)
{
  if (!(std::abs(alpha) <= r.fov / 2.0)) {
    throw std::invalid_argument("classify_region: angle outside the field of view");
  }
  if (std::abs(alpha) <= r.mid_half) {
    return Region::middle;
  }
  return alpha < 0.0 ? Region::left : Region::right;
}

StereoToneCue stereo_cue(const GuidanceDecision & d, const CueRegions & r)
{
  StereoToneCue cue;
  if (d.is_null()) {
    return cue;
  }
  const double az = clamp_to_fov(*d.direction, r);
  const double theta = (az + r.fov / 2.0) / r.fov * (std::numbers::pi / 2.0);
  cue.silent = false;
  cue.azimuth = az;
  cue.gain_left = std::cos(theta);
  cue.gain_right = std::sin(theta);
  return cue;
}

SpeechInstruction speech_cue(const GuidanceDecision & d, ObstacleRegion obstacle, const CueRegions & r)
{
  constexpr int kStopAndScan = 0;
  if (d.is_null()) {
    return fill(kStopAndScan, std::nullopt);
  }
  const double az = clamp_to_fov(*d.direction, r);
  const Region dir = classify_region(az, r);
  const int deg = static_cast<int>(std::lround(std::abs(rad_to_deg(az))));

  switch (obstacle) {
    case ObstacleRegion::none:
      if (dir == Region::middle) {
        return fill(7, std::nullopt);
      }
      break;
    case ObstacleRegion::front:
      if (dir == Region::left) {
        return fill(1, deg);
      }
      if (dir == Region::right) {
        return fill(2, deg);
      }
      break;
    case ObstacleRegion::left:
      if (dir == Region::middle) {
        return fill(3, std::nullopt);
      }
      if (dir == Region::right) {
        return fill(5, deg);
      }
      break;
    case ObstacleRegion::right:
      if (dir == Region::middle) {
        return fill(4, std::nullopt);
      }
      if (dir == Region::left) {
        return fill(6, deg);
      }
      break;
  }
  // Pairs with no row of their own fall back to the stop-and-scan instruction.
  return fill(kStopAndScan, std::nullopt);
}

BeepCue beep_cue(const GuidanceDecision & d, const CueRegions & r)
{
  if (d.is_null()) {
    return {BeepChannel::alternating, kBeepMaxHz};
  }
  const double az = clamp_to_fov(*d.direction, r);
  const Region region = classify_region(az, r);
  if (region == Region::middle) {
    return {BeepChannel::silent, 0.0};
  }
  const double span = r.fov / 2.0 - r.mid_half;
  const double frac = (std::abs(az) - r.mid_half) / span;
  return {region == Region::left ? BeepChannel::left : BeepChannel::right,
          kBeepMinHz + (kBeepMaxHz - kBeepMinHz) * frac};
}

VisualCue visual_cue(const GuidanceDecision & d, const CueRegions & r)
{
  if (d.is_null()) {
    return {VisualState::stop, std::nullopt};
  }
  const double az = *d.direction;
  switch (classify_region(clamp_to_fov(az, r), r)) {
    case Region::middle:
      return {VisualState::forward, az};
    case Region::left:
      return {VisualState::turn_left, az};
    case Region::right:
      return {VisualState::turn_right, az};
  }
  return {VisualState::stop, std::nullopt};
}

int match_speech_template(std::string_view text)
{
  for (std::size_t i = 0; i < kSpeechTemplates.size(); ++i) {
    const std::string_view tpl = kSpeechTemplates[i];
    const std::size_t xx = tpl.find("xx");
    if (xx == std::string_view::npos) {
      if (text == tpl) {
        return static_cast<int>(i);
      }
      continue;
    }
    const std::string_view prefix = tpl.substr(0, xx);
    const std::string_view suffix = tpl.substr(xx + 2);
    if (text.size() <= prefix.size() + suffix.size() || !text.starts_with(prefix) || !text.ends_with(suffix)) {
      continue;
    }
    const std::string_view middle = text.substr(prefix.size(), text.size() - prefix.size() - suffix.size());
    if (std::all_of(middle.begin(), middle.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::string_view to_string(Region r)
{
  switch (r) {
    case Region::left: return "left";
    case Region::middle: return "middle";
    case Region::right: return "right";
  }
  return "?";
}

std::string_view to_string(ObstacleRegion r)
{
  switch (r) {
    case ObstacleRegion::none: return "none";
    case ObstacleRegion::left: return "left";
    case ObstacleRegion::front: return "front";
    case ObstacleRegion::right: return "right";
  }
  return "?";
}

std::string_view to_string(BeepChannel c)
{
  switch (c) {
    case BeepChannel::silent: return "silent";
    case BeepChannel::left: return "left";
    case BeepChannel::right: return "right";
    case BeepChannel::alternating: return "alternating";
  }
  return "?";
}

std::string_view to_string(VisualState s)
{
  switch (s) {
    case VisualState::forward: return "forward";
    case VisualState::turn_left: return "turn_left";
    case VisualState::turn_right: return "turn_right";
    case VisualState::stop: return "stop";
  }
  return "?";
}

}  // namespace guideglass
