// Copyright (c) 2026 The selaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "test_support.h"

namespace selaug {
namespace {

using testing::CliPath;
using testing::FixturePath;
using testing::ReadFile;

using testing::WriteFile;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::MakeTempDir(
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string P(const std::string& name) const { return dir_ + "/" + name; }

  // Runs the CLI with the given arguments; stderr goes to err.txt.
  int Cli(const std::string& args) {
    return testing::Run(CliPath() + " " + args + " 2> " + P("err.txt"));
  }
  std::string Err() const { return ReadFile(P("err.txt")); }

  static size_t Lines(const std::string& text) {
    return static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  std::string dir_;
};

TEST_F(CliTest, DecodeAllBlank) {
  ASSERT_EQ(Cli("decode " + FixturePath("all_blank_frames.jsonl") + " -o " + P("out.jsonl")), 0)
      << Err();
  const std::string out = ReadFile(P("out.jsonl"));
  EXPECT_EQ(Lines(out), 2u);
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    EXPECT_TRUE(nlohmann::json::parse(line).at("phones").empty());
  }
}

TEST_F(CliTest, DecodeMalformedLineReportsLineNumber) {
  EXPECT_NE(Cli("decode " + FixturePath("malformed_frames.jsonl") + " -o " + P("out.jsonl")), 0);
  EXPECT_NE(Err().find("malformed_frames.jsonl:2"), std::string::npos) << Err();
}

TEST_F(CliTest, SynthDecodeRoundTrip) {
  ASSERT_EQ(Cli("synth tracks --seed 3 -n 40 --jitter 1 --rm " + P("rm.jsonl") + " --hm " +
                P("hm.jsonl") + " --rm-frames " + P("rmf.jsonl") + " --hm-frames " +
                P("hmf.jsonl")),
            0)
      << Err();
  ASSERT_EQ(Cli("decode " + P("rmf.jsonl") + " -o " + P("rm2.jsonl")), 0) << Err();
  ASSERT_EQ(Cli("decode --model HM " + P("hmf.jsonl") + " -o " + P("hm2.jsonl")), 0) << Err();
  EXPECT_EQ(ReadFile(P("rm.jsonl")), ReadFile(P("rm2.jsonl")));
  EXPECT_EQ(ReadFile(P("hm.jsonl")), ReadFile(P("hm2.jsonl")));
}

TEST_F(CliTest, AugmentMatchesGroundTruthCount) {
  ASSERT_EQ(Cli("synth tracks --seed 11 -n 200 --rm " + P("rm.jsonl") + " --hm " +
                P("hm.jsonl") + " --truth " + P("truth.jsonl")),
            0);
  ASSERT_EQ(Cli("augment " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " + P("tm.jsonl") +
                " --stats " + P("stats.json")),
            0)
      << Err();
  const auto stats = nlohmann::json::parse(ReadFile(P("stats.json")));
  EXPECT_EQ(stats.at("matched").get<size_t>(), Lines(ReadFile(P("truth.jsonl"))));
  EXPECT_EQ(Lines(ReadFile(P("tm.jsonl"))), 200u);
  EXPECT_NE(Err().find("matched:"), std::string::npos);
}

TEST_F(CliTest, AugmentEmptyInputs) {
  WriteFile(P("rm.jsonl"), "");
  WriteFile(P("hm.jsonl"), "");
  ASSERT_EQ(Cli("augment " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " + P("tm.jsonl") +
                " --stats " + P("stats.json")),
            0);
  EXPECT_TRUE(ReadFile(P("tm.jsonl")).empty());
  const auto stats = nlohmann::json::parse(ReadFile(P("stats.json")));
  EXPECT_EQ(stats.at("matched"), 0);
  EXPECT_EQ(stats.at("utterances"), 0);
}

TEST_F(CliTest, NoBreathyFlag) {
  const std::string gen = "synth tracks --seed 5 -n 300 --rm " + P("rm.jsonl") + " --hm " +
                          P("hm.jsonl");
  ASSERT_EQ(Cli(gen), 0);
  ASSERT_EQ(Cli("augment " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " + P("on.jsonl")), 0);
  ASSERT_EQ(Cli("augment --no-breathy " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " +
                P("off.jsonl")),
            0);
  EXPECT_NE(ReadFile(P("on.jsonl")).find("ʱ"), std::string::npos);
  EXPECT_EQ(ReadFile(P("off.jsonl")).find("ʱ"), std::string::npos);
}

TEST_F(CliTest, MissingCounterpartPolicy) {
  WriteFile(P("rm.jsonl"), R"({"utt_id":"a","model":"RM","frame_ms":20,"phones":[]})" "\n");
  WriteFile(P("hm.jsonl"), "");
  EXPECT_EQ(Cli("augment " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " + P("tm.jsonl")), 1);
  EXPECT_EQ(Cli("augment --skip-missing " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " +
                P("tm.jsonl") + " --skip-report " + P("skip.json")),
            0);
  EXPECT_EQ(nlohmann::json::parse(ReadFile(P("skip.json"))).at("skipped"),
            nlohmann::json::array({"a"}));
}

TEST_F(CliTest, PrefilterAspiration) {
  ASSERT_EQ(Cli("synth tracks --seed 9 -n 50 --rm " + P("rm.jsonl") + " --hm " + P("hm.jsonl")), 0);
  ASSERT_EQ(Cli("prefilter-aspiration " + P("rm.jsonl") + " " + P("hm.jsonl") + " -o " +
                P("ids.jsonl")),
            0)
      << Err();
  EXPECT_GT(Lines(ReadFile(P("ids.jsonl"))), 0u);
}

TEST_F(CliTest, EvaluateGoldenTables) {
  ASSERT_EQ(Cli("evaluate " + FixturePath("onset_mix_tm.jsonl") + " --text " + P("t.txt") +
                " --json " + P("r.json") + " --boxplot " + P("b.csv")),
            0);
  EXPECT_EQ(ReadFile(P("t.txt")), ReadFile(FixturePath("onset_mix_tm_report.txt")));
  EXPECT_EQ(ReadFile(P("t.txt")).find("Significance"), std::string::npos);
  ASSERT_EQ(Cli("evaluate --group velar " + FixturePath("velar_tm.jsonl") +
                " --text " + P("v.txt")),
            0);
  EXPECT_EQ(ReadFile(P("v.txt")), ReadFile(FixturePath("velar_tm_report.txt")));
}

TEST_F(CliTest, EvaluateStrictOnly) {
  ASSERT_EQ(Cli("evaluate --strict " + FixturePath("onset_mix_tm.jsonl") + " --text " + P("t.txt")), 0);
  const std::string t = ReadFile(P("t.txt"));
  EXPECT_NE(t.find("61.2"), std::string::npos);
  EXPECT_EQ(t.find("63.6"), std::string::npos);
}

TEST_F(CliTest, EvaluateTwoModels) {
  ASSERT_EQ(Cli("synth eval --seed 2 -o " + P("ev.jsonl")), 0);
  ASSERT_EQ(Cli("evaluate " + P("ev.jsonl") + " --text " + P("t.txt")), 0);
  EXPECT_NE(ReadFile(P("t.txt")).find("Significance"), std::string::npos);
}

TEST_F(CliTest, PrepareSampleSplitOnset) {
  std::string manifest;
  const char* words[] = {"Bald", "Dach", "Gut", "Post", "Tisch", "Kalt", "Es"};
  for (int i = 0; i < 7000; ++i) {
    nlohmann::json r = {{"utt_id", "u" + std::to_string(100000 + i)},
                        {"language", "de"},
                        {"sentence", std::string(words[i % 7]) + " hier"},
                        {"transcription", "a"},
                        {"downvotes", i % 50 == 0 ? 1 : 0},
                        {"analyzable", true}};
    manifest += r.dump() + "\n";
  }
  WriteFile(P("m.jsonl"), manifest);
  ASSERT_EQ(Cli("prepare sample " + P("m.jsonl") + " -n 1000 --seed 4 -o " + P("s1.jsonl")), 0);
  ASSERT_EQ(Cli("prepare sample " + P("m.jsonl") + " -n 1000 --seed 4 -o " + P("s2.jsonl")), 0);
  EXPECT_EQ(ReadFile(P("s1.jsonl")), ReadFile(P("s2.jsonl")));
  EXPECT_EQ(Lines(ReadFile(P("s1.jsonl"))), 1000u);
  ASSERT_EQ(Cli("prepare split " + P("m.jsonl") + " --fraction 0.2 --seed 1 --train " +
                P("train.jsonl") + " --valid " + P("valid.jsonl")),
            0);
  EXPECT_EQ(Lines(ReadFile(P("valid.jsonl"))), 1400u);
  EXPECT_EQ(Lines(ReadFile(P("train.jsonl"))), 5600u);
  ASSERT_EQ(Cli("prepare filter " + P("m.jsonl") + " -o " + P("f.jsonl")), 0);
  EXPECT_EQ(Lines(ReadFile(P("f.jsonl"))), 7000u - 140u);
  ASSERT_EQ(Cli("prepare onset-testset " + P("m.jsonl") + " -n 40 --seed 3 -o " + P("t.jsonl")), 0);
  EXPECT_EQ(Lines(ReadFile(P("t.jsonl"))), 240u);
  EXPECT_EQ(Cli("prepare onset-testset " + P("s1.jsonl") + " -n 400 --seed 3 -o " + P("t2.jsonl")), 1);
  EXPECT_NE(Err().find("400"), std::string::npos) << Err();
}

TEST_F(CliTest, PrepareRemapAndVocab) {
  WriteFile(P("m.jsonl"), R"({"utt_id":"a","transcription":"gut"})" "\n"
                          R"({"utt_id":"b","transcription":"a1"})" "\n");
  WriteFile(P("cfg.json"), R"({"remap": {"1": ""}, "exclude": []})");
  ASSERT_EQ(Cli("prepare remap " + P("m.jsonl") + " --config " + P("cfg.json") + " -o " +
                P("out.jsonl") + " --report " + P("rep.json")),
            0)
      << Err();
  EXPECT_NE(ReadFile(P("out.jsonl")).find("ɡut"), std::string::npos);
  WriteFile(P("vocab.json"), R"({"<pad>": 0, "a": 1, "g": 2, "ɡ": 3, "u": 4, "t": 5})");
  ASSERT_EQ(Cli("prepare clean-vocab " + P("vocab.json") + " --manifest " + P("out.jsonl") +
                " --remove g --add ʱ -o " + P("v.json") + " --id-map " + P("map.json")),
            0)
      << Err();
  const auto v = nlohmann::json::parse(ReadFile(P("v.json")));
  EXPECT_FALSE(v.contains("g"));
  EXPECT_TRUE(v.contains("ʱ"));
}

TEST_F(CliTest, FailFastOnBadConfig) {
  WriteFile(P("inv.json"), "{not json");
  EXPECT_EQ(Cli("--inventory " + P("inv.json") + " decode " +
                FixturePath("all_blank_frames.jsonl") + " -o " + P("out.jsonl")),
            1);
  EXPECT_FALSE(std::filesystem::exists(P("out.jsonl")));
  EXPECT_NE(Cli("--mapping " + P("nope.json") + " augment a b"), 0);
  EXPECT_NE(Cli("decode " + P("missing.jsonl")), 0);
  EXPECT_NE(Err().find("missing.jsonl"), std::string::npos);
}

TEST_F(CliTest, UsageErrorIsNonzero) {
  EXPECT_NE(Cli("frobnicate"), 0);
  EXPECT_NE(Cli(""), 0);
}

}  // namespace
}  // namespace selaug
