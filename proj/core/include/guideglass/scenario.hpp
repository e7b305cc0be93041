#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "guideglass/engine_config.hpp"
#include "guideglass/scene.hpp"

namespace guideglass {

enum class Policy {
  guided,         // the agent follows the fused decision
  straight_line,  // guidance ignored: head for the goal and walk
};

struct FrameRecord
{
  int frame{0};
  Pose pose;
  GuidanceDecision decision;
  UltrasonicReading ultrasonic{UltrasonicReading::max_range()};
  ObstacleRegion obstacle{ObstacleRegion::none};
  CueBundle cues;
  std::size_t candidates{0};
  bool collided{false};
};

struct ScenarioReport
{
  bool reached_goal{false};
  int steps{0};
  double sim_time_s{0.0};
  int collisions{0};
  Pose final_pose;
  std::vector<FrameRecord> frames;
};

/// Closed loop: sense, way-find, fuse, cue and step until the goal disc is
/// reached or limits.max_steps frames have run. Deterministic in (scene, engine, seed).
ScenarioReport run_scenario(const Scene & scene, const EngineConfig & engine, std::uint64_t seed,
                            Policy policy = Policy::guided);

/// A scenario file: the scene plus engine overrides and a seed.
struct ScenarioFile
{
  Scene scene;
  std::vector<std::pair<std::string, std::string>> overrides;  // dotted key, value text
  std::uint64_t seed{0};

  /// Engine defaults with this file's overrides applied, then validated.
  EngineConfig engine() const;
};

/// Throws std::invalid_argument with a diagnostic for malformed input.
ScenarioFile parse_scenario(const std::string & json_text);
ScenarioFile load_scenario(const std::string & path);
std::string format_scenario(const ScenarioFile & file);

}  // namespace guideglass
