#pragma once

#include <optional>
#include <vector>

#include "guideglass/cueing.hpp"
#include "guideglass/fusion.hpp"
#include "guideglass/sensors.hpp"
#include "guideglass/wayfinding.hpp"

namespace guideglass {

struct CueBundle
{
  StereoToneCue stereo;
  SpeechInstruction speech;
  BeepCue beep;
  VisualCue visual;
};

struct PipelineConfig
{
  CameraIntrinsics camera;
  WayfindingConfig wayfinding;
  FusionConfig fusion;
  CueRegions cues;
  bool fusion_enabled{true};

  void validate() const;
};

struct FrameResult
{
  CandidateSet candidates;
  std::optional<Candidate> depth_optimum;
  GuidanceDecision decision;
  CueBundle cues;
};

/// One pass of scan line -> candidates -> cost argmin -> ultrasonic gate -> cues.
FrameResult process_frame(const DepthScanLine & line, const UltrasonicReading & reading,
                          ObstacleRegion obstacle, const PipelineConfig & cfg);

CueBundle synthesize_cues(const GuidanceDecision & decision, ObstacleRegion obstacle, const CueRegions & regions);

/// Replay-side obstacle region: front if any middle-band column is blocked,
/// otherwise the side with more blocked columns, none if nothing is blocked.
ObstacleRegion obstacle_region_from_mask(const std::vector<bool> & mask, const CameraIntrinsics & k,
                                         const CueRegions & regions);

}  // namespace guideglass
