#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "guideglass/scenario.hpp"

namespace guideglass {

enum class CueKind { stereo, speech, beep, visual };

std::string_view to_string(CueKind k);
/// Throws std::invalid_argument for unknown names.
CueKind parse_cue_kind(std::string_view name);

/// x rounded to 6 significant digits, the precision of every serialized float.
double round_sig6(double x);
/// "%.6g" text of x.
std::string format_sig6(double x);

// Single-line JSON objects. Angles are written in degrees.

std::string decision_json(int frame, const GuidanceDecision & d, const UltrasonicReading & reading,
                          const UltrasonicConfig & ucfg);
std::string cue_json(const CueBundle & cues, CueKind kind);
/// Decision fields plus a "cue" object (one kind) or "cues" (all kinds when kind is empty).
std::string frame_json(int frame, const GuidanceDecision & d, const UltrasonicReading & reading,
                       const CueBundle & cues, const UltrasonicConfig & ucfg, std::optional<CueKind> kind);

/// Summary report; per-frame records are included when with_frames is set.
std::string report_json(const ScenarioReport & r, const UltrasonicConfig & ucfg, bool with_frames);
/// One line per frame: decision fields, pose, obstacle region and the cues (all
/// kinds, or only the given one).
std::string report_frames_jsonl(const ScenarioReport & r, const UltrasonicConfig & ucfg,
                                std::optional<CueKind> kind = std::nullopt);

}  // namespace guideglass
