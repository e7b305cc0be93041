#include "guideglass/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace guideglass {

using nlohmann::json;

namespace {

json opt_deg(const std::optional<double> & rad)
{
  return rad ? json(round_sig6(rad_to_deg(*rad))) : json(nullptr);
}

json decision_object(int frame, const GuidanceDecision & d, const UltrasonicReading & reading,
                     const UltrasonicConfig & ucfg)
{
  return {
    {"frame", frame},
    {"alpha_deg", opt_deg(d.direction)},
    {"width_m", d.chosen_width_m ? json(round_sig6(*d.chosen_width_m)) : json(nullptr)},
    {"gated_by_ultrasonic", d.gated_by_ultrasonic},
    {"ultrasonic_m", round_sig6(reading.serialized_m(ucfg))},
  };
}

json cue_object(const CueBundle & c, CueKind kind)
{
  switch (kind) {
    case CueKind::stereo:
      return {{"kind", "stereo"},
              {"silent", c.stereo.silent},
              {"azimuth_deg", round_sig6(rad_to_deg(c.stereo.azimuth))},
              {"gain_left", round_sig6(c.stereo.gain_left)},
              {"gain_right", round_sig6(c.stereo.gain_right)}};
    case CueKind::speech:
      return {{"kind", "speech"},
              {"text", c.speech.text},
              {"turn_deg", c.speech.turn_deg ? json(*c.speech.turn_deg) : json(nullptr)}};
    case CueKind::beep:
      return {{"kind", "beep"},
              {"channel", std::string(to_string(c.beep.channel))},
              {"frequency_hz", round_sig6(c.beep.frequency_hz)}};
    case CueKind::visual:
      return {{"kind", "visual"},
              {"state", std::string(to_string(c.visual.state))},
              {"marker_azimuth_deg", opt_deg(c.visual.marker_azimuth)}};
  }
  throw std::logic_error("cue_object: bad kind");
}

json all_cues(const CueBundle & c)
{
  json arr = json::array();
  for (CueKind k : {CueKind::stereo, CueKind::speech, CueKind::beep, CueKind::visual}) {
    arr.push_back(cue_object(c, k));
  }
  return arr;
}

json frame_object(const FrameRecord & f, const UltrasonicConfig & ucfg, std::optional<CueKind> kind = std::nullopt)
{
  json j = decision_object(f.frame, f.decision, f.ultrasonic, ucfg);
  j["x"] = round_sig6(f.pose.position.x);
  j["y"] = round_sig6(f.pose.position.y);
  j["yaw_deg"] = round_sig6(rad_to_deg(f.pose.yaw));
  j["obstacle_region"] = std::string(to_string(f.obstacle));
  j["candidates"] = f.candidates;
  j["collided"] = f.collided;
  if (kind) {
    j["cue"] = cue_object(f.cues, *kind);
  } else {
    j["cues"] = all_cues(f.cues);
  }
  return j;
}

}  // namespace

std::string_view to_string(CueKind k)
{
  switch (k) {
    case CueKind::stereo: return "stereo";
    case CueKind::speech: return "speech";
    case CueKind::beep: return "beep";
    case CueKind::visual: return "visual";
  }
  return "?";
}

CueKind parse_cue_kind(std::string_view name)
{
  for (CueKind k : {CueKind::stereo, CueKind::speech, CueKind::beep, CueKind::visual}) {
    if (to_string(k) == name) {
      return k;
    }
  }
  throw std::invalid_argument("unknown cue kind '" + std::string(name) + "'");
}

std::string format_sig6(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double round_sig6(double x)
{
  return std::strtod(format_sig6(x).c_str(), nullptr);
}

std::string decision_json(int frame, const GuidanceDecision & d, const UltrasonicReading & reading,
                          const UltrasonicConfig & ucfg)
{
  return decision_object(frame, d, reading, ucfg).dump();
}

std::string cue_json(const CueBundle & cues, CueKind kind)
{
  return cue_object(cues, kind).dump();
}

std::string frame_json(int frame, const GuidanceDecision & d, const UltrasonicReading & reading,
                       const CueBundle & cues, const UltrasonicConfig & ucfg, std::optional<CueKind> kind)
{
  json j = decision_object(frame, d, reading, ucfg);
  if (kind) {
    j["cue"] = cue_object(cues, *kind);
  } else {
    j["cues"] = all_cues(cues);
  }
  return j.dump();
}

std::string report_json(const ScenarioReport & r, const UltrasonicConfig & ucfg, bool with_frames)
{
  json j{
    {"reached_goal", r.reached_goal},
    {"steps", r.steps},
    {"sim_time_s", round_sig6(r.sim_time_s)},
    {"collisions", r.collisions},
    {"final_pose",
     {{"position", {round_sig6(r.final_pose.position.x), round_sig6(r.final_pose.position.y)}},
      {"yaw_deg", round_sig6(rad_to_deg(r.final_pose.yaw))}}},
  };
  if (with_frames) {
    json frames = json::array();
    for (const FrameRecord & f : r.frames) {
      frames.push_back(frame_object(f, ucfg));
    }
    j["frames"] = std::move(frames);
  }
  return j.dump(2) + "\n";
}

std::string report_frames_jsonl(const ScenarioReport & r, const UltrasonicConfig & ucfg,
                                std::optional<CueKind> kind)
{
  std::string out;
  for (const FrameRecord & f : r.frames) {
    out += frame_object(f, ucfg, kind).dump();
    out += '\n';
  }
  return out;
}

}  // namespace guideglass
