#include "guideglass/experiments.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "guideglass/records.hpp"

namespace guideglass {

namespace {

std::vector<bool> mask_of(const DepthScanLine & line, const EngineConfig & engine)
{
  const CandidateSet set = extract_candidates(line, engine.pipeline.wayfinding, engine.pipeline.camera);
  return traversability_mask(set, line.size());
}

std::vector<double> grid(double lo, double hi, double step)
{
  std::vector<double> out;
  const int n = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= n; ++i) {
    out.push_back(std::round((lo + i * step) * 1e9) / 1e9);
  }
  return out;
}

}  // namespace

bool obstacle_detected(const MinHeightTemplate & tpl, double camera_height, double obstacle_distance,
                       double obstacle_height, const EngineConfig & engine, std::uint64_t seed)
{
  const double far_x = obstacle_distance + tpl.box_depth + 5.0;
  Scene empty;
  empty.bounds = {-1.0, -5.0, far_x, 5.0};
  empty.start.camera_height = camera_height;
  empty.goal = {far_x - 1.0, 0.0};

  Scene scene = empty;
  scene.obstacles.push_back(
    {{obstacle_distance, -tpl.box_width / 2.0, obstacle_distance + tpl.box_depth, tpl.box_width / 2.0},
     obstacle_height,
     tpl.material});

  const CameraIntrinsics & k = engine.pipeline.camera;
  Pose pose = empty.start;
  const int n_steps = static_cast<int>(std::floor((obstacle_distance - engine.agent.radius) / tpl.approach_step));

  if (engine.depth.noise_enabled) {
    // Twin streams: the empty reference sees exactly the same noise draws per column.
    std::mt19937_64 rng_scene(seed);
    std::mt19937_64 rng_empty(seed);
    for (int i = 0; i < n_steps; ++i) {
      pose.position.x = i * tpl.approach_step;
      const auto seen = mask_of(render_depth_scanline(scene, pose, k, engine.depth, rng_scene), engine);
      const auto reference = mask_of(render_depth_scanline(empty, pose, k, engine.depth, rng_empty), engine);
      if (seen != reference) {
        return true;
      }
    }
    return false;
  }

  // A flat empty floor looks the same from every point of the approach.
  const std::vector<bool> reference = mask_of(render_depth_scanline(empty, empty.start, k, engine.depth), engine);
  for (int i = 0; i < n_steps; ++i) {
    pose.position.x = i * tpl.approach_step;
    if (mask_of(render_depth_scanline(scene, pose, k, engine.depth), engine) != reference) {
      return true;
    }
  }
  return false;
}

double min_detectable_height(const MinHeightTemplate & tpl, double camera_height, double obstacle_distance,
                             const EngineConfig & engine, std::uint64_t seed)
{
  if (!(tpl.resolution > 0.0) || !(tpl.max_height > 0.0) || !(tpl.approach_step > 0.0)) {
    throw std::invalid_argument("min_detectable_height: bad template");
  }
  double lo = 0.0;
  double hi = tpl.max_height;
  if (!obstacle_detected(tpl, camera_height, obstacle_distance, hi, engine, seed)) {
    return hi;
  }
  while (hi - lo > tpl.resolution) {
    const double mid = 0.5 * (lo + hi);
    if (obstacle_detected(tpl, camera_height, obstacle_distance, mid, engine, seed)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<double> default_sweep_heights() { return grid(1.4, 1.8, 0.1); }
std::vector<double> default_sweep_distances() { return grid(1.0, 2.0, 0.1); }

HeightSweep sweep_min_height(const std::vector<double> & camera_heights, const std::vector<double> & distances,
                             const EngineConfig & engine, const MinHeightTemplate & tpl, std::uint64_t seed)
{
  constexpr double tol = 1e-9;
  for (double h : camera_heights) {
    if (h < 1.4 - tol || h > 1.8 + tol) {
      throw std::invalid_argument("sweep-height: camera height " + format_sig6(h) + " outside [1.4, 1.8]");
    }
  }
  for (double d : distances) {
    if (d < 1.0 - tol || d > 2.0 + tol) {
      throw std::invalid_argument("sweep-height: distance " + format_sig6(d) + " outside [1.0, 2.0]");
    }
  }
  HeightSweep out{camera_heights, distances, {}};
  for (double h : camera_heights) {
    std::vector<double> row;
    for (double d : distances) {
      row.push_back(min_detectable_height(tpl, h, d, engine, seed));
    }
    out.min_height.push_back(std::move(row));
  }
  return out;
}

std::string format_height_sweep_csv(const HeightSweep & sweep)
{
  std::ostringstream os;
  os << "camera_height_m";
  for (double d : sweep.distances) {
    os << ',' << format_sig6(d);
  }
  os << '\n';
  for (std::size_t i = 0; i < sweep.camera_heights.size(); ++i) {
    os << format_sig6(sweep.camera_heights[i]);
    for (double v : sweep.min_height[i]) {
      os << ',' << format_sig6(v);
    }
    os << '\n';
  }
  return os.str();
}

void GlassSweepConfig::validate() const
{
  if (scenes < 1 || frames_per_scene < 1) {
    throw std::invalid_argument("sweep-glass: need at least one scene and one frame");
  }
  if (!(near_distance > 0.0 && near_distance <= far_distance)) {
    throw std::invalid_argument("sweep-glass: bad approach distances");
  }
  if (!(min_width > 0.0 && min_width <= max_width) || !(max_offset >= 0.0) || !(yaw_jitter >= 0.0)) {
    throw std::invalid_argument("sweep-glass: bad panel geometry");
  }
  if (!(panel_height > 0.0) || !(panel_thickness > 0.0)) {
    throw std::invalid_argument("sweep-glass: panel height and thickness must be positive");
  }
}

GlassScene make_glass_scene(Material material, const GlassSweepConfig & cfg, std::uint64_t scene_seed)
{
  std::mt19937_64 rng(scene_seed);
  std::uniform_real_distribution<double> width(cfg.min_width, cfg.max_width);
  std::uniform_real_distribution<double> offset(-cfg.max_offset, cfg.max_offset);
  std::uniform_real_distribution<double> yaw(-cfg.yaw_jitter, cfg.yaw_jitter);

  constexpr double panel_x = 3.0;
  const double w = width(rng);
  const double c = offset(rng);
  GlassScene out;
  out.scene.bounds = {0.0, -4.0, 6.0, 4.0};
  out.scene.obstacles.push_back(
    {{panel_x, c - w / 2.0, panel_x + cfg.panel_thickness, c + w / 2.0}, cfg.panel_height, material});
  out.scene.goal = {5.5, 0.0};
  for (int i = 0; i < cfg.frames_per_scene; ++i) {
    const double frac = cfg.frames_per_scene > 1 ? static_cast<double>(i) / (cfg.frames_per_scene - 1) : 0.0;
    const double dist = cfg.far_distance + frac * (cfg.near_distance - cfg.far_distance);
    Pose p;
    p.position = {panel_x - dist, 0.0};
    p.yaw = yaw(rng);
    out.frames.push_back(p);
  }
  out.scene.start = out.frames.front();
  return out;
}

bool glass_frame_correct(const Scene & scene, const Pose & pose, const GuidanceDecision & d, double delta)
{
  if (d.is_null()) {
    return true;
  }
  const double heading = pose.yaw + *d.direction;
  for (const Obstacle & o : scene.obstacles) {
    const auto t = ray_rect_distance(pose.position, heading, o.footprint);
    if (t && *t <= delta) {
      return false;
    }
  }
  return true;
}

std::vector<GlassAccuracy> sweep_glass(const std::vector<Material> & materials, const GlassSweepConfig & cfg,
                                       const EngineConfig & engine)
{
  cfg.validate();
  engine.validate();
  std::vector<GlassAccuracy> rows;
  for (Material m : materials) {
    GlassAccuracy depth_only{m, false, cfg.scenes, 0, 0};
    GlassAccuracy fused{m, true, cfg.scenes, 0, 0};
    std::mt19937_64 noise(cfg.seed);
    for (int s = 0; s < cfg.scenes; ++s) {
      // Geometry depends only on the scene index, so every material sees the same layouts.
      const GlassScene gs = make_glass_scene(m, cfg, cfg.seed * 1000003ULL + static_cast<std::uint64_t>(s));
      for (const Pose & pose : gs.frames) {
        const DepthScanLine line =
          render_depth_scanline(gs.scene, pose, engine.pipeline.camera, engine.depth, noise);
        const UltrasonicReading reading = simulate_ultrasonic(gs.scene, pose, engine.ultrasonic);
        const CandidateSet set =
          extract_candidates(line, engine.pipeline.wayfinding, engine.pipeline.camera);
        const std::optional<Candidate> best = select_direction(set, engine.pipeline.fusion);
        const GuidanceDecision raw = best ? GuidanceDecision::toward(*best) : GuidanceDecision::null();
        const GuidanceDecision gated = fuse_ultrasonic(best, reading, engine.pipeline.fusion);
        const double delta = engine.pipeline.fusion.delta;
        ++depth_only.frames;
        ++fused.frames;
        depth_only.correct += glass_frame_correct(gs.scene, pose, raw, delta) ? 1 : 0;
        fused.correct += glass_frame_correct(gs.scene, pose, gated, delta) ? 1 : 0;
      }
    }
    rows.push_back(depth_only);
    rows.push_back(fused);
  }
  return rows;
}

std::string format_glass_sweep_csv(const std::vector<GlassAccuracy> & rows)
{
  std::ostringstream os;
  os << "material,fusion,scenes,frames,accuracy\n";
  for (const GlassAccuracy & r : rows) {
    os << to_string(r.material) << ',' << (r.fused ? "fused" : "depth_only") << ',' << r.scenes << ','
       << r.frames << ',' << format_sig6(r.accuracy()) << '\n';
  }
  return os.str();
}

}  // namespace guideglass
