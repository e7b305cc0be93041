#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "guideglass/engine_config.hpp"
#include "guideglass/scene.hpp"

namespace guideglass {

/// Test object for the detectable-height experiment: a box straight ahead of the
/// walker, approached in fixed steps until the body would touch it.
struct MinHeightTemplate
{
  double box_width{0.4};    // lateral extent, m
  double box_depth{0.3};    // extent along the walking direction, m
  Material material{Material::opaque};
  double approach_step{0.01};
  double max_height{1.0};
  double resolution{0.005};  // bisection stops once the bracket is this narrow
};

/// True when a box of the given height, first seen with its near face at
/// obstacle_distance and then approached, changes the traversability mask of any
/// frame versus the empty floor.
bool obstacle_detected(const MinHeightTemplate & tpl, double camera_height, double obstacle_distance,
                       double obstacle_height, const EngineConfig & engine, std::uint64_t seed = 0);

/// Smallest detectable height (upper end of the final bisection bracket).
/// Returns max_height when even that height goes unseen.
double min_detectable_height(const MinHeightTemplate & tpl, double camera_height, double obstacle_distance,
                             const EngineConfig & engine, std::uint64_t seed = 0);

struct HeightSweep
{
  std::vector<double> camera_heights;
  std::vector<double> distances;
  std::vector<std::vector<double>> min_height;  // [height index][distance index]
};

/// 1.4..1.8 m in 0.1 m steps and 1.0..2.0 m in 0.1 m steps.
std::vector<double> default_sweep_heights();
std::vector<double> default_sweep_distances();

/// Throws std::invalid_argument for heights outside [1.4, 1.8] or distances
/// outside [1.0, 2.0].
HeightSweep sweep_min_height(const std::vector<double> & camera_heights, const std::vector<double> & distances,
                             const EngineConfig & engine, const MinHeightTemplate & tpl = {},
                             std::uint64_t seed = 0);
std::string format_height_sweep_csv(const HeightSweep & sweep);

/// One randomized glass-partition scene of the transparent-obstacle experiment.
struct GlassScene
{
  Scene scene;           // panel obstacle at index 0
  std::vector<Pose> frames;
};

struct GlassSweepConfig
{
  int scenes{200};
  int frames_per_scene{5};
  double near_distance{0.45};  // approach distances to the panel face, m
  double far_distance{0.9};
  double yaw_jitter{deg_to_rad(5.0)};
  double min_width{1.5};
  double max_width{3.0};
  double max_offset{0.3};
  double panel_height{2.0};
  double panel_thickness{0.05};
  std::uint64_t seed{1};

  void validate() const;
};

GlassScene make_glass_scene(Material material, const GlassSweepConfig & cfg, std::uint64_t scene_seed);

/// A frame is correct when the decision is Null or the chosen heading clears every
/// obstacle for at least delta meters.
bool glass_frame_correct(const Scene & scene, const Pose & pose, const GuidanceDecision & d, double delta);

struct GlassAccuracy
{
  Material material{Material::ir_transparent};
  bool fused{false};
  int scenes{0};
  int frames{0};
  int correct{0};

  double accuracy() const { return frames > 0 ? static_cast<double>(correct) / frames : 0.0; }
};

/// Rows ordered by material, then depth-only before fused.
std::vector<GlassAccuracy> sweep_glass(const std::vector<Material> & materials, const GlassSweepConfig & cfg,
                                       const EngineConfig & engine);
std::string format_glass_sweep_csv(const std::vector<GlassAccuracy> & rows);

}  // namespace guideglass
