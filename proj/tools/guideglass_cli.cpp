// guideglass: run scenarios, replay recorded sensor logs, and run the detectable
// height and glass accuracy sweeps.
//
// Exit status: 0 success, 1 usage or configuration error, 2 goal not reached.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "guideglass/experiments.hpp"
#include "guideglass/records.hpp"
#include "guideglass/scenario.hpp"

namespace gg = guideglass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitGoalMissed = 2;

struct Common
{
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool no_ultrasonic{false};
  bool no_noise{false};
  std::string cue;
};

std::string read_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string & path, const std::string & text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write '" + path + "'");
  }
  out << text;
}

void apply_common(gg::EngineConfig & cfg, const Common & c)
{
  for (const std::string & kv : c.overrides) {
    cfg.apply_assignment(kv);
  }
  if (c.no_ultrasonic) {
    cfg.pipeline.fusion_enabled = false;
  }
  if (c.no_noise) {
    cfg.depth.noise_enabled = false;
  }
  cfg.validate();
}

std::optional<gg::CueKind> cue_kind(const Common & c)
{
  if (c.cue.empty()) {
    return std::nullopt;
  }
  return gg::parse_cue_kind(c.cue);
}

void add_common(CLI::App * cmd, Common & c)
{
  cmd->add_option("--set", c.overrides, "Config override key=value (repeatable), e.g. wayfinding.delta=1.5");
  cmd->add_option("--seed", c.seed, "Random seed (overrides the scenario's)");
  cmd->add_option("--out", c.out, "Output path (default stdout)");
  cmd->add_flag("--no-ultrasonic", c.no_ultrasonic, "Depth-only guidance (disable the ultrasonic gate)");
  cmd->add_flag("--no-noise", c.no_noise, "Disable depth noise");
  cmd->add_option("--cue", c.cue, "Cue kind to log")->check(CLI::IsMember({"stereo", "speech", "beep", "visual"}));
}

int cmd_run(const std::string & scenario_path, const Common & c, const std::string & log_path, bool straight)
{
  const gg::ScenarioFile file = gg::load_scenario(scenario_path);
  gg::EngineConfig cfg = file.engine();
  apply_common(cfg, c);
  const std::uint64_t seed = c.seed.value_or(file.seed);
  const gg::ScenarioReport report =
    gg::run_scenario(file.scene, cfg, seed, straight ? gg::Policy::straight_line : gg::Policy::guided);

  write_output(c.out, gg::report_json(report, cfg.ultrasonic, false));
  if (!log_path.empty()) {
    write_output(log_path, gg::report_frames_jsonl(report, cfg.ultrasonic, cue_kind(c)));
  }
  return report.reached_goal ? kExitOk : kExitGoalMissed;
}

std::vector<std::string> nonempty_lines(const std::string & text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      out.push_back(line);
    }
  }
  return out;
}

int cmd_replay(const std::string & depth_path, const std::string & ultra_path, const Common & c)
{
  gg::EngineConfig cfg;
  apply_common(cfg, c);

  const std::vector<std::string> rows = nonempty_lines(read_file(depth_path));
  const std::vector<gg::UltrasonicLogEntry> echoes = gg::parse_ultrasonic_log(read_file(ultra_path));
  if (rows.size() != echoes.size()) {
    throw std::invalid_argument("replay: " + std::to_string(rows.size()) + " depth frames but " +
                                std::to_string(echoes.size()) + " ultrasonic frames");
  }
  const gg::CameraIntrinsics & k = cfg.pipeline.camera;
  const gg::CueKind kind = c.cue.empty() ? gg::CueKind::speech : gg::parse_cue_kind(c.cue);

  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (echoes[i].frame != static_cast<int>(i)) {
      throw std::invalid_argument("replay: ultrasonic log line " + std::to_string(i + 1) + " is frame " +
                                  std::to_string(echoes[i].frame) + ", expected " + std::to_string(i));
    }
    const gg::DepthScanLine line = gg::parse_scanline_csv(rows[i], cfg.depth.resolved_row(k));
    if (line.size() != static_cast<std::size_t>(k.width)) {
      throw std::invalid_argument("replay: depth frame " + std::to_string(i) + " has " +
                                  std::to_string(line.size()) + " samples, camera width is " +
                                  std::to_string(k.width));
    }
    std::optional<double> echo_s;
    if (echoes[i].echo_ms) {
      echo_s = *echoes[i].echo_ms / 1000.0;
    }
    const gg::UltrasonicReading reading = gg::echo_to_reading(echo_s, cfg.ultrasonic);
    const gg::CandidateSet set = gg::extract_candidates(line, cfg.pipeline.wayfinding, k);
    const gg::ObstacleRegion region =
      gg::obstacle_region_from_mask(gg::traversability_mask(set, line.size()), k, cfg.pipeline.cues);
    const gg::FrameResult r = gg::process_frame(line, reading, region, cfg.pipeline);
    out += gg::frame_json(static_cast<int>(i), r.decision, reading, r.cues, cfg.ultrasonic, kind);
    out += '\n';
  }
  write_output(c.out, out);
  return kExitOk;
}

int cmd_sweep_height(const std::vector<double> & heights, const std::vector<double> & distances, const Common & c)
{
  gg::EngineConfig cfg;
  apply_common(cfg, c);
  const gg::HeightSweep sweep = gg::sweep_min_height(heights.empty() ? gg::default_sweep_heights() : heights,
                                                     distances.empty() ? gg::default_sweep_distances() : distances,
                                                     cfg, {}, c.seed.value_or(0));
  write_output(c.out, gg::format_height_sweep_csv(sweep));
  return kExitOk;
}

int cmd_sweep_glass(int scenes, const std::vector<std::string> & material_names, const Common & c)
{
  gg::EngineConfig cfg;
  cfg.depth.noise_enabled = true;
  Common local = c;
  local.no_ultrasonic = false;
  apply_common(cfg, local);

  gg::GlassSweepConfig g;
  g.scenes = scenes;
  g.seed = c.seed.value_or(g.seed);
  std::vector<gg::Material> materials;
  for (const std::string & m : material_names) {
    materials.push_back(gg::parse_material(m));
  }
  if (materials.empty()) {
    materials = {gg::Material::frosted, gg::Material::ir_transparent};
  }
  std::vector<gg::GlassAccuracy> rows = gg::sweep_glass(materials, g, cfg);
  if (c.no_ultrasonic) {
    std::erase_if(rows, [](const gg::GlassAccuracy & r) { return r.fused; });
  }
  write_output(c.out, gg::format_glass_sweep_csv(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Depth and ultrasonic guidance engine with a scene simulator"};
  app.require_subcommand(1);

  Common run_opts;
  std::string scenario_path;
  std::string log_path;
  bool straight = false;
  CLI::App * run = app.add_subcommand("run", "Run a scenario file and write its report");
  run->add_option("scenario", scenario_path, "Scenario JSON")->required();
  run->add_option("--log", log_path, "Per-frame JSON-lines log");
  run->add_flag("--straight-line", straight, "Ignore guidance and head straight for the goal");
  add_common(run, run_opts);

  Common replay_opts;
  std::string depth_path;
  std::string ultra_path;
  CLI::App * replay = app.add_subcommand("replay", "Replay recorded depth and ultrasonic logs");
  replay->add_option("--depth", depth_path, "Depth CSV, one scan row per line in millimetres")->required();
  replay->add_option("--ultrasonic", ultra_path, "Ultrasonic CSV: frame,echo_ms")->required();
  add_common(replay, replay_opts);

  Common height_opts;
  std::vector<double> heights;
  std::vector<double> distances;
  CLI::App * sweep_h = app.add_subcommand("sweep-height", "Minimum detectable obstacle height grid (CSV)");
  sweep_h->add_option("--heights", heights, "Camera heights in metres")->delimiter(',');
  sweep_h->add_option("--distances", distances, "Obstacle distances in metres")->delimiter(',');
  add_common(sweep_h, height_opts);

  Common glass_opts;
  int scenes = 200;
  std::vector<std::string> materials;
  CLI::App * sweep_g = app.add_subcommand("sweep-glass", "Decision accuracy in front of glass panels (CSV)");
  sweep_g->add_option("--scenes", scenes, "Randomized scenes per material")->check(CLI::PositiveNumber);
  sweep_g->add_option("--materials", materials, "Materials: frosted, ir_transparent (glass), opaque")
    ->delimiter(',');
  add_common(sweep_g, glass_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) {
      return cmd_run(scenario_path, run_opts, log_path, straight);
    }
    if (replay->parsed()) {
      return cmd_replay(depth_path, ultra_path, replay_opts);
    }
    if (sweep_h->parsed()) {
      return cmd_sweep_height(heights, distances, height_opts);
    }
    return cmd_sweep_glass(scenes, materials, glass_opts);
  } catch (const std::exception & e) {
    std::cerr << "guideglass: " << e.what() << '\n';
    return kExitConfig;
  }
}
