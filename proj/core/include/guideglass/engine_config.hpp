#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "guideglass/agent.hpp"
#include "guideglass/pipeline.hpp"
#include "guideglass/raycast.hpp"
#include "guideglass/sensors.hpp"

namespace guideglass {

struct ScenarioLimits
{
  int max_steps{3000};
};

/// Every tunable of the engine and the simulator in one place.
struct EngineConfig
{
  PipelineConfig pipeline;
  UltrasonicConfig ultrasonic;
  DepthSensorConfig depth;
  AgentConfig agent;
  ScenarioLimits limits;
  double cue_lookahead{2.0};  // m; obstacle-region ground truth horizon

  void validate() const;

  /// Sets one value by dotted key, e.g. "wayfinding.delta". Angles are given in
  /// degrees for keys ending in "_deg". "delta" alone sets both thresholds.
  /// Throws std::invalid_argument for unknown keys or unparsable values.
  void apply_override(std::string_view key, std::string_view value);
  /// Parses "key=value" and forwards to apply_override.
  void apply_assignment(std::string_view assignment);

  static const std::vector<std::string> & override_keys();
};

}  // namespace guideglass
