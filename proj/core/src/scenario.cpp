#include "guideglass/scenario.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace guideglass {

using nlohmann::json;

ScenarioReport run_scenario(const Scene & scene, const EngineConfig & engine, std::uint64_t seed, Policy policy)
{
  scene.validate();
  engine.validate();

  std::mt19937_64 rng(seed);
  AgentState agent = make_agent(scene.start, engine.agent, scene.goal);
  ScenarioReport report;

  for (int frame = 0; frame < engine.limits.max_steps; ++frame) {
    if (norm(scene.goal - agent.pose.position) <= engine.agent.goal_radius) {
      report.reached_goal = true;
      break;
    }
    if (policy == Policy::straight_line) {
      agent.pose.yaw = wrap_angle(agent.pose.yaw + relative_bearing(agent.pose, scene.goal));
    }

    const DepthScanLine line = render_depth_scanline(scene, agent.pose, engine.pipeline.camera, engine.depth, rng);
    const UltrasonicReading reading = simulate_ultrasonic(scene, agent.pose, engine.ultrasonic);
    const ObstacleRegion region =
      obstacle_region_truth(scene, agent.pose, engine.pipeline.cues, engine.cue_lookahead);
    FrameResult result = process_frame(line, reading, region, engine.pipeline);

    GuidanceDecision applied = result.decision;
    if (policy == Policy::straight_line) {
      applied = GuidanceDecision{0.0, std::nullopt, false};
      result.cues = synthesize_cues(applied, region, engine.pipeline.cues);
    }

    FrameRecord rec;
    rec.frame = frame;
    rec.pose = agent.pose;
    rec.decision = applied;
    rec.ultrasonic = reading;
    rec.obstacle = region;
    rec.cues = result.cues;
    rec.candidates = result.candidates.size();

    agent = step_agent(agent, applied, engine.agent, scene);
    rec.collided = agent.collided;
    report.frames.push_back(std::move(rec));
  }
  if (!report.reached_goal && norm(scene.goal - agent.pose.position) <= engine.agent.goal_radius) {
    report.reached_goal = true;
  }

  report.steps = agent.steps;
  report.sim_time_s = agent.steps * engine.agent.frame_dt;
  report.collisions = agent.collisions;
  report.final_pose = agent.pose;
  return report;
}

EngineConfig ScenarioFile::engine() const
{
  EngineConfig cfg;
  for (const auto & [k, v] : overrides) {
    cfg.apply_override(k, v);
  }
  cfg.validate();
  return cfg;
}

namespace {

Vec2 read_point(const json & j, const char * what)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string("scenario: ") + what + " must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double read_number(const json & obj, const char * key, double fallback)
{
  if (!obj.contains(key)) {
    return fallback;
  }
  if (!obj[key].is_number()) {
    throw std::invalid_argument(std::string("scenario: ") + key + " must be a number");
  }
  return obj[key].get<double>();
}

}  // namespace

ScenarioFile parse_scenario(const std::string & json_text)
{
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error & e) {
    throw std::invalid_argument(std::string("scenario: ") + e.what());
  }
  if (!root.is_object()) {
    throw std::invalid_argument("scenario: top level must be an object");
  }

  ScenarioFile out;
  Scene & s = out.scene;
  try {
    const json & b = root.at("bounds");
    const Vec2 lo = read_point(b.at("min"), "bounds.min");
    const Vec2 hi = read_point(b.at("max"), "bounds.max");
    s.bounds = {lo.x, lo.y, hi.x, hi.y};

    for (const json & o : root.value("obstacles", json::array())) {
      const json & r = o.at("rect");
      if (!r.is_array() || r.size() != 4) {
        throw std::invalid_argument("scenario: obstacle rect must be [x0, y0, x1, y1]");
      }
      Obstacle ob;
      ob.footprint = {r[0].get<double>(), r[1].get<double>(), r[2].get<double>(), r[3].get<double>()};
      ob.height = o.at("height").get<double>();
      ob.material = parse_material(o.value("material", std::string("opaque")));
      s.obstacles.push_back(ob);
    }

    const json & st = root.at("start");
    s.start.position = read_point(st.at("position"), "start.position");
    s.start.yaw = deg_to_rad(read_number(st, "yaw_deg", 0.0));
    s.start.camera_height = read_number(st, "camera_height", s.start.camera_height);
    s.start.camera_pitch = deg_to_rad(read_number(st, "camera_pitch_deg", rad_to_deg(s.start.camera_pitch)));
    s.goal = read_point(root.at("goal"), "goal");

    if (root.contains("engine")) {
      for (const auto & [k, v] : root["engine"].items()) {
        out.overrides.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    out.seed = root.value("seed", std::uint64_t{0});
  } catch (const json::exception & e) {
    throw std::invalid_argument(std::string("scenario: ") + e.what());
  }
  s.validate();
  out.engine();
  return out;
}

ScenarioFile load_scenario(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("scenario: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_scenario(const ScenarioFile & file)
{
  const Scene & s = file.scene;
  json root;
  root["bounds"] = {{"min", {s.bounds.x0, s.bounds.y0}}, {"max", {s.bounds.x1, s.bounds.y1}}};
  root["obstacles"] = json::array();
  for (const Obstacle & o : s.obstacles) {
    root["obstacles"].push_back({{"rect", {o.footprint.x0, o.footprint.y0, o.footprint.x1, o.footprint.y1}},
                                 {"height", o.height},
                                 {"material", std::string(to_string(o.material))}});
  }
  root["start"] = {{"position", {s.start.position.x, s.start.position.y}},
                   {"yaw_deg", rad_to_deg(s.start.yaw)},
                   {"camera_height", s.start.camera_height},
                   {"camera_pitch_deg", rad_to_deg(s.start.camera_pitch)}};
  root["goal"] = {s.goal.x, s.goal.y};
  root["engine"] = json::object();
  for (const auto & [k, v] : file.overrides) {
    root["engine"][k] = v;
  }
  root["seed"] = file.seed;
  return root.dump(2) + "\n";
}

}  // namespace guideglass
