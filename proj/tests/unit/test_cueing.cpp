#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "guideglass/cueing.hpp"

using namespace guideglass;

namespace {

const CueRegions kR{};

GuidanceDecision toward_deg(double deg)
{
  GuidanceDecision d;
  d.direction = deg_to_rad(deg);
  d.chosen_width_m = 1.0;
  return d;
}

// Expected row for (obstacle, direction region); -1 marks pairs without a row.
int table_row(ObstacleRegion o, std::optional<Region> dir)
{
  if (!dir) {
    return 0;
  }
  switch (o) {
    case ObstacleRegion::none: return *dir == Region::middle ? 7 : -1;
    case ObstacleRegion::front: return *dir == Region::left ? 1 : *dir == Region::right ? 2 : -1;
    case ObstacleRegion::left: return *dir == Region::middle ? 3 : *dir == Region::right ? 5 : -1;
    case ObstacleRegion::right: return *dir == Region::middle ? 4 : *dir == Region::left ? 6 : -1;
  }
  return -1;
}

}  // namespace

TEST(ClassifyRegion, Examples)
{
  EXPECT_EQ(classify_region(0.0, kR), Region::middle);
  EXPECT_EQ(classify_region(deg_to_rad(-20.0), kR), Region::left);
  EXPECT_EQ(classify_region(deg_to_rad(20.0), kR), Region::right);
  EXPECT_EQ(classify_region(kR.mid_half, kR), Region::middle);
  EXPECT_EQ(classify_region(-kR.mid_half, kR), Region::middle);
  EXPECT_THROW(classify_region(deg_to_rad(31.0), kR), std::invalid_argument);
}

TEST(StereoCue, Examples)
{
  const StereoToneCue c = stereo_cue(toward_deg(0.0), kR);
  EXPECT_FALSE(c.silent);
  EXPECT_NEAR(c.gain_left, 0.7071, 1e-4);
  EXPECT_NEAR(c.gain_right, 0.7071, 1e-4);

  const StereoToneCue r = stereo_cue(toward_deg(30.0), kR);
  EXPECT_NEAR(r.gain_left, 0.0, 1e-12);
  EXPECT_NEAR(r.gain_right, 1.0, 1e-12);

  EXPECT_TRUE(stereo_cue(GuidanceDecision::null(), kR).silent);
}

TEST(StereoCue, ConstantPowerAcrossField)
{
  for (int i = -300; i <= 300; ++i) {
    const StereoToneCue c = stereo_cue(toward_deg(i / 10.0), kR);
    EXPECT_NEAR(c.gain_left * c.gain_left + c.gain_right * c.gain_right, 1.0, 1e-9);
    EXPECT_GE(c.gain_left, -1e-15);
    EXPECT_GE(c.gain_right, -1e-15);
  }
}

TEST(SpeechCue, Examples)
{
  EXPECT_EQ(speech_cue(toward_deg(-20.0), ObstacleRegion::front).text,
            "Attention, obstacle in front of you, turn left 20 degrees");
  EXPECT_EQ(speech_cue(toward_deg(0.0), ObstacleRegion::none).text, "Go straight");
  EXPECT_EQ(speech_cue(GuidanceDecision::null(), ObstacleRegion::front).text,
            "Attention, obstacle in front of you, turn left or right slowly");
  EXPECT_EQ(speech_cue(toward_deg(12.4), ObstacleRegion::left).text,
            "Attention, obstacle in left of you, turn right 12 degrees");
  EXPECT_EQ(speech_cue(toward_deg(-8.5), ObstacleRegion::right).turn_deg, std::optional<int>(9));
  EXPECT_EQ(speech_cue(toward_deg(2.0), ObstacleRegion::right).text, "Attention, obstacle in right of you, go straight");
}

TEST(SpeechCue, InconsistentPairsFallBackToStopAndScan)
{
  EXPECT_EQ(speech_cue(GuidanceDecision::null(), ObstacleRegion::none).template_index, 0);
  EXPECT_EQ(speech_cue(toward_deg(0.0), ObstacleRegion::front).template_index, 0);
  EXPECT_EQ(speech_cue(toward_deg(-20.0), ObstacleRegion::left).template_index, 0);
  EXPECT_EQ(speech_cue(toward_deg(20.0), ObstacleRegion::none).template_index, 0);
}

TEST(SpeechCue, ExhaustiveOverGrid)
{
  const ObstacleRegion regions[] = {ObstacleRegion::none, ObstacleRegion::left, ObstacleRegion::front,
                                    ObstacleRegion::right};
  int checked = 0;
  for (ObstacleRegion o : regions) {
    for (int i = -301; i <= 300; ++i) {
      const bool null = i == -301;
      const GuidanceDecision d = null ? GuidanceDecision::null() : toward_deg(i / 10.0);
      const SpeechInstruction s = speech_cue(d, o);
      int matches = 0;
      for (std::size_t t = 0; t < kSpeechTemplates.size(); ++t) {
        std::string expect(kSpeechTemplates[t]);
        const std::size_t xx = expect.find("xx");
        if (xx != std::string::npos && s.turn_deg) {
          expect.replace(xx, 2, std::to_string(*s.turn_deg));
        }
        matches += expect == s.text ? 1 : 0;
      }
      EXPECT_EQ(matches, 1) << s.text;
      EXPECT_EQ(match_speech_template(s.text), s.template_index);

      const std::optional<Region> dir = null ? std::nullopt : std::optional(classify_region(*d.direction, kR));
      const int row = table_row(o, dir);
      EXPECT_EQ(s.template_index, row < 0 ? 0 : row);
      if (s.turn_deg) {
        EXPECT_EQ(*s.turn_deg, static_cast<int>(std::lround(std::abs(i / 10.0))));
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 4 * 602);
}

TEST(BeepCue, Examples)
{
  EXPECT_EQ(beep_cue(toward_deg(0.0), kR).channel, BeepChannel::silent);
  const BeepCue left = beep_cue(toward_deg(-30.0), kR);
  EXPECT_EQ(left.channel, BeepChannel::left);
  EXPECT_NEAR(left.frequency_hz, 1200.0, 1e-9);
  EXPECT_EQ(beep_cue(toward_deg(15.0), kR).channel, BeepChannel::right);
  const BeepCue none = beep_cue(GuidanceDecision::null(), kR);
  EXPECT_EQ(none.channel, BeepChannel::alternating);
  EXPECT_EQ(none.frequency_hz, kBeepMaxHz);
}

TEST(BeepCue, FrequencyGrowsWithAngle)
{
  double prev = 0.0;
  for (int i = 76; i <= 300; ++i) {
    const BeepCue b = beep_cue(toward_deg(i / 10.0), kR);
    ASSERT_EQ(b.channel, BeepChannel::right);
    EXPECT_GT(b.frequency_hz, prev);
    EXPECT_GE(b.frequency_hz, kBeepMinHz);
    EXPECT_LE(b.frequency_hz, kBeepMaxHz);
    EXPECT_DOUBLE_EQ(beep_cue(toward_deg(-i / 10.0), kR).frequency_hz, b.frequency_hz);
    prev = b.frequency_hz;
  }
}

TEST(VisualCue, Examples)
{
  EXPECT_EQ(visual_cue(GuidanceDecision::null(), kR).state, VisualState::stop);
  EXPECT_FALSE(visual_cue(GuidanceDecision::null(), kR).marker_azimuth.has_value());
  EXPECT_EQ(visual_cue(toward_deg(3.0), kR).state, VisualState::forward);
  const VisualCue v = visual_cue(toward_deg(-20.0), kR);
  EXPECT_EQ(v.state, VisualState::turn_left);
  EXPECT_NEAR(*v.marker_azimuth, deg_to_rad(-20.0), 1e-15);
  EXPECT_EQ(visual_cue(toward_deg(20.0), kR).state, VisualState::turn_right);
}

TEST(Cues, ForwardSilentMiddleAgree)
{
  for (int i = -300; i <= 300; ++i) {
    const GuidanceDecision d = toward_deg(i / 10.0);
    const bool forward = visual_cue(d, kR).state == VisualState::forward;
    const bool silent = beep_cue(d, kR).channel == BeepChannel::silent;
    const bool middle = classify_region(*d.direction, kR) == Region::middle;
    EXPECT_EQ(forward, silent) << i;
    EXPECT_EQ(silent, middle) << i;
  }
}

TEST(Cues, OutOfFieldAnglesAreClamped)
{
  const GuidanceDecision d = toward_deg(40.0);
  EXPECT_EQ(visual_cue(d, kR).state, VisualState::turn_right);
  EXPECT_NEAR(stereo_cue(d, kR).gain_right, 1.0, 1e-12);
  EXPECT_EQ(speech_cue(d, ObstacleRegion::front).text, "Attention, obstacle in front of you, turn right 30 degrees");
}

TEST(MatchSpeechTemplate, Recognises)
{
  EXPECT_EQ(match_speech_template("Go straight"), 7);
  EXPECT_EQ(match_speech_template("Attention, obstacle in right of you, turn left 7 degrees"), 6);
  EXPECT_EQ(match_speech_template("Attention, obstacle in right of you, turn left x degrees"), -1);
  EXPECT_EQ(match_speech_template("Go left"), -1);
}

TEST(CueRegions, Validation)
{
  EXPECT_NO_THROW(kR.validate());
  CueRegions bad;
  bad.mid_half = bad.fov;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}
