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
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selaug/corpus.h"
#include "selaug/error.h"
#include "selaug/inventory.h"
#include "selaug/ipa.h"
#include "selaug/random.h"

namespace selaug {
namespace {

SegmentRecord Record(const std::string& id, const std::string& lang = "de") {
  SegmentRecord r;
  r.utt_id = id;
  r.language = lang;
  return r;
}

Manifest Numbered(size_t n, const std::string& lang = "de") {
  Manifest m;
  for (size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_%05zu", lang.c_str(), i);
    m.push_back(Record(buf, lang));
  }
  return m;
}

std::string Dump(const Manifest& m) {
  std::ostringstream out;
  WriteManifest(out, m);
  return out.str();
}

std::set<std::string> Ids(const Manifest& m) {
  std::set<std::string> ids;
  for (const auto& r : m) ids.insert(r.utt_id);
  return ids;
}

TEST(Manifest, JsonRoundTripKeepsExtraFields) {
  const std::string line =
      R"({"utt_id":"a","language":"de","sentence":"Ganz toll","transcription":"ɡants",)"
      R"("upvotes":2,"downvotes":0,"analyzable":true,"speaker":"s1"})";
  std::istringstream in(line + "\n");
  const Manifest m = ReadManifest(in, "m");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].extra.at("speaker"), "s1");
  std::istringstream again(Dump(m));
  EXPECT_EQ(Dump(ReadManifest(again, "m")), Dump(m));
}

TEST(Manifest, DuplicateIdRejected) {
  std::istringstream in("{\"utt_id\":\"a\"}\n{\"utt_id\":\"a\"}\n");
  EXPECT_THROW(ReadManifest(in, "m"), FormatError);
}

TEST(FilterDownvoted, Rules) {
  Manifest m = Numbered(3);
  m[0].downvotes = 2;
  m[1].downvotes = 0;
  m[2].downvotes = 1;
  EXPECT_EQ(Ids(FilterDownvoted(m)), (std::set<std::string>{"de_00001"}));
  EXPECT_EQ(FilterDownvoted(m, 1).size(), 2u);
}

TEST(FilterDownvoted, RecountOracle) {
  SeededRng rng(1);
  for (int iter = 0; iter < 100; ++iter) {
    Manifest m = Numbered(rng.UniformBelow(50));
    size_t downvoted = 0;
    for (auto& r : m) {
      r.downvotes = rng.Bernoulli(0.3) ? rng.UniformInt(1, 4) : 0;
      downvoted += r.downvotes > 0;
    }
    EXPECT_EQ(FilterDownvoted(m).size(), m.size() - downvoted);
  }
}

TEST(SampleSegments, WholeManifestAndDeterminism) {
  const Manifest m = Numbered(30);
  EXPECT_EQ(Ids(SampleSegments(m, 30, 9)), Ids(m));
  EXPECT_EQ(Dump(SampleSegments(m, 10, 9)), Dump(SampleSegments(m, 10, 9)));
  EXPECT_NE(Dump(SampleSegments(m, 10, 9)), Dump(SampleSegments(m, 10, 10)));
  const Manifest s = SampleSegments(m, 10, 9);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.utt_id < b.utt_id;
  }));
  EXPECT_THROW(SampleSegments(m, 31, 9), InsufficientSegments);
}

TEST(SampleSegments, PerLanguageCounts) {
  Manifest m;
  for (const char* lang : {"de", "en", "es", "fr", "it", "nl", "pt"}) {
    const Manifest part = Numbered(1300, lang);
    m.insert(m.end(), part.begin(), part.end());
  }
  const Manifest s = SampleSegments(m, 1000, 4, true);
  std::map<std::string, int> counts;
  for (const auto& r : s) ++counts[r.language];
  ASSERT_EQ(counts.size(), 7u);
  for (const auto& [lang, n] : counts) EXPECT_EQ(n, 1000) << lang;
}

TEST(SplitValidation, PaperRatios) {
  const Manifest m = Numbered(7000);
  EXPECT_EQ(SplitValidation(m, 0.05, 1).valid.size(), 350u);
  EXPECT_EQ(SplitValidation(m, 0.20, 1).valid.size(), 1400u);
  EXPECT_EQ(SplitValidation(m, 0.20, 1).train.size(), 5600u);
  EXPECT_THROW(SplitValidation(m, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(SplitValidation(m, 1.0, 1), std::invalid_argument);
}

TEST(SplitValidation, SetAlgebraOracle) {
  SeededRng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const Manifest m = Numbered(rng.UniformBelow(80));
    const double fraction = rng.UniformReal(0.01, 0.99);
    const auto split = SplitValidation(m, fraction, rng.Next());
    const auto train = Ids(split.train);
    const auto valid = Ids(split.valid);
    std::set<std::string> both;
    std::set_intersection(train.begin(), train.end(), valid.begin(), valid.end(),
                          std::inserter(both, both.end()));
    EXPECT_TRUE(both.empty());
    std::set<std::string> all = train;
    all.insert(valid.begin(), valid.end());
    EXPECT_EQ(all, Ids(m));
    EXPECT_EQ(valid.size(),
              static_cast<size_t>(std::llround(fraction * static_cast<double>(m.size()))));
    for (const auto& r : split.valid) EXPECT_EQ(r.split, SplitTag::kValid);
    for (const auto& r : split.train) EXPECT_EQ(r.split, SplitTag::kTrain);
  }
}

TEST(RemapInvalid, RewritesDropsAndReports) {
  Manifest m = Numbered(4);
  m[0].transcription = "ʃtʁaːsə";
  m[1].transcription = "ɡut";
  m[2].transcription = "gut";
  m[3].transcription = "a?b";
  RemapConfig cfg;
  cfg.remap = {{"?", ""}};
  cfg.exclude = {"ʃ"};
  const auto r = RemapInvalid(m, cfg, Inventory::Default());
  EXPECT_EQ(Ids(r.manifest), (std::set<std::string>{"de_00001", "de_00002", "de_00003"}));
  EXPECT_EQ(r.manifest[1].transcription, "ɡut");
  EXPECT_EQ(r.manifest[2].transcription, "ab");
  for (const auto& rec : r.manifest) {
    EXPECT_EQ(Serialize(TokenizeIpa(Inventory::Default(), rec.transcription)),
              rec.transcription);
  }
  EXPECT_EQ(r.report.size(), 3u);
  EXPECT_TRUE(r.ReportJson().is_array() || r.ReportJson().is_object());
}

TEST(RemapInvalid, UnknownSymbolsDropped) {
  Manifest m = Numbered(1);
  m[0].transcription = "a1b";
  const auto r = RemapInvalid(m, {}, Inventory::Default());
  EXPECT_TRUE(r.manifest.empty());
  ASSERT_EQ(r.report.size(), 1u);
  EXPECT_EQ(r.report[0].action, RemapEvent::Action::kDrop);
}

TEST(RemapConfig, LongestPatternFirst) {
  const auto cfg = RemapConfig::FromJson({{"remap", {{"a", "o"}, {"ab", "e"}}}});
  ASSERT_EQ(cfg.remap.size(), 2u);
  EXPECT_EQ(cfg.remap[0].first, "ab");
  Manifest m = Numbered(1);
  m[0].transcription = "aba";
  const auto r = RemapInvalid(m, cfg, Inventory::Default());
  ASSERT_EQ(r.manifest.size(), 1u);
  EXPECT_EQ(r.manifest[0].transcription, "eo");
}

TEST(CleanVocab, RemovesLatinGAndAddsBreathy) {
  const VocabSpec vocab = VocabSpec::FromJson(
      {{"<pad>", 0}, {"a", 1}, {"g", 2}, {"ɡ", 3}, {"t", 4}}, "<pad>");
  const std::vector<std::string> corpus = {"ɡat", "ta"};
  const auto c = CleanVocab(vocab, corpus, {"g"}, {"ʱ"});
  EXPECT_EQ(c.vocab.tokens, (std::vector<std::string>{"<pad>", "a", "ɡ", "t", "ʱ"}));
  EXPECT_EQ(c.id_map.at(3), 2);
  EXPECT_EQ(c.id_map.count(2), 0u);
  EXPECT_EQ(c.removed, std::vector<std::string>{"g"});
  EXPECT_EQ(c.added, std::vector<std::string>{"ʱ"});
  const auto twice = CleanVocab(c.vocab, corpus, {"g"}, {"ʱ"});
  EXPECT_EQ(twice.vocab, c.vocab);
  EXPECT_EQ(std::count(c.vocab.tokens.begin(), c.vocab.tokens.end(), "ʱ"), 1);
}

TEST(CleanVocab, RemoveInUse) {
  const VocabSpec vocab = VocabSpec::FromJson({{"_", 0}, {"g", 1}}, "_");
  EXPECT_THROW(CleanVocab(vocab, {"gut"}, {"g"}, {}), RemoveInUse);
}

TEST(CleanVocab, BlankMustBePresentOnce) {
  EXPECT_THROW(VocabSpec::FromJson({{"a", 0}}, "_"), FormatError);
  EXPECT_THROW(VocabSpec::FromJson({{"a", 0}, {"_", 2}}, "_"), FormatError);
}

TEST(OnsetPhoneme, Rules) {
  EXPECT_EQ(OnsetPhoneme("Ganz toll"), "g");
  EXPECT_EQ(OnsetPhoneme("„Bitte schön“"), "b");
  EXPECT_EQ(OnsetPhoneme("  Tag"), "t");
  EXPECT_FALSE(OnsetPhoneme("Es gibt viel").has_value());
  EXPECT_FALSE(OnsetPhoneme("").has_value());
}

Manifest OnsetManifest(size_t per_phoneme, size_t unanalyzable) {
  Manifest m;
  const char* words[] = {"Bald", "Dach", "Gut", "Post", "Tisch", "Kalt", "Es"};
  size_t id = 0;
  for (const char* w : words) {
    for (size_t i = 0; i < per_phoneme + unanalyzable; ++i) {
      SegmentRecord r = Record("r" + std::to_string(100000 + id++));
      r.sentence = std::string(w) + " ist da";
      r.analyzable = i >= unanalyzable;
      m.push_back(r);
    }
  }
  return m;
}

TEST(BuildOnsetTestset, FortyPerPhoneme) {
  const Manifest m = OnsetManifest(55, 10);
  const Manifest t = BuildOnsetTestset(m, 40, 2);
  EXPECT_EQ(t.size(), 240u);
  std::map<std::string, int> counts;
  for (const auto& r : t) {
    ++counts[r.phoneme.value()];
    EXPECT_EQ(r.analyzable, true);
    EXPECT_EQ(r.split, SplitTag::kTest);
    EXPECT_EQ(OnsetPhoneme(r.sentence), r.phoneme);
  }
  for (const char* p : kOnsetPhonemes) EXPECT_EQ(counts[p], 40) << p;
  EXPECT_EQ(Dump(t), Dump(BuildOnsetTestset(m, 40, 2)));
  EXPECT_EQ(Ids(t).size(), 240u);
}

TEST(BuildOnsetTestset, ShortBucket) {
  const Manifest m = OnsetManifest(39, 5);
  try {
    BuildOnsetTestset(m, 40, 2);
    FAIL() << "expected InsufficientInstances";
  } catch (const InsufficientInstances& e) {
    EXPECT_NE(std::string(e.what()).find("39"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace selaug
