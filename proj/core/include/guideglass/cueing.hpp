#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "guideglass/fusion.hpp"
#include "guideglass/geometry.hpp"

namespace guideglass {

/// Horizontal partition of the guidance field: a middle band flanked by one
/// region on each side.
struct CueRegions
{
  double fov{deg_to_rad(60.0)};
  double mid_half{deg_to_rad(7.5)};

  void validate() const;
};

enum class Region { left, middle, right };
enum class ObstacleRegion { none, left, front, right };

/// Throws std::invalid_argument when |alpha| > fov / 2.
Region classify_region(double alpha, const CueRegions & r);

/// Constant-power stereo pan placing a virtual source at the chosen direction.
struct StereoToneCue
{
  bool silent{true};
  double azimuth{0.0};
  double gain_left{0.0};
  double gain_right{0.0};
};

/// One row of the recorded-instruction table.
struct SpeechInstruction
{
  std::string text;
  std::optional<int> turn_deg;
  int template_index{0};
};

enum class BeepChannel { silent, left, right, alternating };

struct BeepCue
{
  BeepChannel channel{BeepChannel::silent};
  double frequency_hz{0.0};
};

enum class VisualState { forward, turn_left, turn_right, stop };

struct VisualCue
{
  VisualState state{VisualState::stop};
  std::optional<double> marker_azimuth;
};

inline constexpr double kBeepMinHz = 400.0;
inline constexpr double kBeepMaxHz = 1200.0;

/// The recorded instruction templates; "xx" stands for the steering angle in degrees.
inline constexpr std::array<std::string_view, 8> kSpeechTemplates{
  "Attention, obstacle in front of you, turn left or right slowly",
  "Attention, obstacle in front of you, turn left xx degrees",
  "Attention, obstacle in front of you, turn right xx degrees",
  "Attention, obstacle in left of you, go straight",
  "Attention, obstacle in right of you, go straight",
  "Attention, obstacle in left of you, turn right xx degrees",
  "Attention, obstacle in right of you, turn left xx degrees",
  "Go straight",
};

StereoToneCue stereo_cue(const GuidanceDecision & d, const CueRegions & r);
SpeechInstruction speech_cue(const GuidanceDecision & d, ObstacleRegion obstacle, const CueRegions & r = {});
BeepCue beep_cue(const GuidanceDecision & d, const CueRegions & r);
VisualCue visual_cue(const GuidanceDecision & d, const CueRegions & r);

/// Index of the template text matches, or -1. Digits stand in for "xx".
int match_speech_template(std::string_view text);

std::string_view to_string(Region r);
std::string_view to_string(ObstacleRegion r);
std::string_view to_string(BeepChannel c);
std::string_view to_string(VisualState s);

}  // namespace guideglass
