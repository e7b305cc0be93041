#include "guideglass/pipeline.hpp"

#include <cmath>

namespace guideglass {

void PipelineConfig::validate() const
{
  camera.validate();
  wayfinding.validate();
  fusion.validate();
  cues.validate();
}

CueBundle synthesize_cues(const GuidanceDecision & decision, ObstacleRegion obstacle, const CueRegions & regions)
{
  return {stereo_cue(decision, regions), speech_cue(decision, obstacle, regions), beep_cue(decision, regions),
          visual_cue(decision, regions)};
}

FrameResult process_frame(const DepthScanLine & line, const UltrasonicReading & reading,
                          ObstacleRegion obstacle, const PipelineConfig & cfg)
{
  FrameResult out;
  out.candidates = extract_candidates(line, cfg.wayfinding, cfg.camera);
  out.depth_optimum = select_direction(out.candidates, cfg.fusion);
  if (cfg.fusion_enabled) {
    out.decision = fuse_ultrasonic(out.depth_optimum, reading, cfg.fusion);
  } else if (out.depth_optimum) {
    out.decision = GuidanceDecision::toward(*out.depth_optimum);
  }
  out.cues = synthesize_cues(out.decision, obstacle, cfg.cues);
  return out;
}

ObstacleRegion obstacle_region_from_mask(const std::vector<bool> & mask, const CameraIntrinsics & k,
                                         const CueRegions & regions)
{
  int left = 0;
  int right = 0;
  for (std::size_t u = 0; u < mask.size(); ++u) {
    if (mask[u]) {
      continue;
    }
    const double bearing = std::atan((static_cast<double>(u) - k.u0) / k.f);
    if (std::abs(bearing) <= regions.mid_half) {
      return ObstacleRegion::front;
    }
    (bearing < 0.0 ? left : right) += 1;
  }
  if (left == 0 && right == 0) {
    return ObstacleRegion::none;
  }
  return left >= right ? ObstacleRegion::left : ObstacleRegion::right;
}

}  // namespace guideglass
