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

#include "selaug/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "selaug/error.h"
#include "selaug/ipa.h"
#include "selaug/jsonl.h"
#include "selaug/random.h"
#include "selaug/unicode.h"

namespace selaug {

namespace {

const std::set<std::string> kKnownFields = {
    "utt_id",   "language",  "sentence", "transcription", "upvotes",
    "downvotes", "split",    "analyzable", "phoneme"};

// Partial Fisher-Yates: the first n elements of the pool end up as a uniform
// sample without replacement.
template <typename T>
std::vector<T> DrawWithoutReplacement(std::vector<T> pool, size_t n,
                                      SeededRng& rng) {
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + rng.UniformBelow(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

Manifest SortedCopy(const Manifest& m) {
  Manifest out = m;
  SortByUttId(&out);
  return out;
}

}  // namespace

std::string_view ToString(SplitTag tag) {
  switch (tag) {
    case SplitTag::kTrain:
      return "train";
    case SplitTag::kValid:
      return "valid";
    case SplitTag::kTest:
      return "test";
  }
  return "?";
}

SplitTag ParseSplitTag(std::string_view s) {
  if (s == "train") return SplitTag::kTrain;
  if (s == "valid") return SplitTag::kValid;
  if (s == "test") return SplitTag::kTest;
  throw FormatError("unknown split tag '" + std::string(s) + "'");
}

SegmentRecord SegmentRecordFromJson(const nlohmann::json& j) {
  SegmentRecord r;
  r.utt_id = RequireString(j, "utt_id");
  if (r.utt_id.empty()) throw FormatError("empty utt_id");
  if (j.contains("language")) r.language = RequireString(j, "language");
  if (j.contains("sentence")) r.sentence = Nfc(RequireString(j, "sentence"));
  if (j.contains("transcription")) {
    r.transcription = Nfc(RequireString(j, "transcription"));
  }
  if (j.contains("upvotes")) r.upvotes = RequireInt(j, "upvotes");
  if (j.contains("downvotes")) r.downvotes = RequireInt(j, "downvotes");
  if (j.contains("split") && !j.at("split").is_null()) {
    r.split = ParseSplitTag(RequireString(j, "split"));
  }
  if (j.contains("analyzable")) r.analyzable = RequireBool(j, "analyzable");
  if (j.contains("phoneme")) r.phoneme = RequireString(j, "phoneme");
  for (const auto& [key, value] : j.items()) {
    if (kKnownFields.count(key) == 0) r.extra[key] = value;
  }
  return r;
}

nlohmann::json SegmentRecordToJson(const SegmentRecord& r) {
  nlohmann::json j = r.extra;
  j["utt_id"] = r.utt_id;
  j["language"] = r.language;
  j["sentence"] = r.sentence;
  j["transcription"] = r.transcription;
  j["upvotes"] = r.upvotes;
  j["downvotes"] = r.downvotes;
  if (r.split) j["split"] = std::string(ToString(*r.split));
  if (r.analyzable) j["analyzable"] = *r.analyzable;
  if (r.phoneme) j["phoneme"] = *r.phoneme;
  return j;
}

Manifest ReadManifest(std::istream& in, const std::string& source_name) {
  Manifest m;
  std::unordered_set<std::string> seen;
  JsonLinesReader reader(in, source_name);
  nlohmann::json j;
  while (reader.Next(&j)) {
    try {
      m.push_back(SegmentRecordFromJson(j));
    } catch (const Error& e) {
      reader.Fail(e.what());
    }
    if (!seen.insert(m.back().utt_id).second) {
      reader.Fail("duplicate utt_id '" + m.back().utt_id + "'");
    }
  }
  return m;
}

Manifest ReadManifestFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadManifest(in, path);
}

void WriteManifest(std::ostream& out, const Manifest& manifest) {
  for (const auto& r : manifest) WriteJsonLine(out, SegmentRecordToJson(r));
}

void SortByUttId(Manifest* manifest) {
  std::sort(manifest->begin(), manifest->end(),
            [](const SegmentRecord& a, const SegmentRecord& b) {
              return a.utt_id < b.utt_id;
            });
}

Manifest FilterDownvoted(const Manifest& manifest, int64_t max_downvotes) {
  Manifest out;
  std::copy_if(manifest.begin(), manifest.end(), std::back_inserter(out),
               [&](const SegmentRecord& r) {
                 return r.downvotes <= max_downvotes;
               });
  return out;
}

Manifest SampleSegments(const Manifest& manifest, size_t n, uint64_t seed,
                        bool per_language) {
  Manifest out;
  if (!per_language) {
    if (manifest.size() < n) throw InsufficientSegments(manifest.size(), n);
    SeededRng rng(seed);
    out = DrawWithoutReplacement(SortedCopy(manifest), n, rng);
  } else {
    std::map<std::string, Manifest> by_language;
    for (const auto& r : manifest) by_language[r.language].push_back(r);
    for (auto& [language, records] : by_language) {
      if (records.size() < n) {
        throw InsufficientSegments(records.size(), n);
      }
      SortByUttId(&records);
      SeededRng rng(DeriveSeed(seed, HashName(language)));
      for (auto& r : DrawWithoutReplacement(std::move(records), n, rng)) {
        out.push_back(std::move(r));
      }
    }
  }
  SortByUttId(&out);
  return out;
}

TrainValidSplit SplitValidation(const Manifest& manifest, double fraction,
                                uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("validation fraction must lie in (0, 1)");
  }
  Manifest pool = SortedCopy(manifest);
  SeededRng rng(seed);
  rng.Shuffle(&pool);
  const auto n_valid = static_cast<size_t>(
      std::llround(fraction * static_cast<double>(pool.size())));

  TrainValidSplit split;
  for (size_t i = 0; i < pool.size(); ++i) {
    SegmentRecord& r = pool[i];
    if (i < n_valid) {
      r.split = SplitTag::kValid;
      split.valid.push_back(std::move(r));
    } else {
      r.split = SplitTag::kTrain;
      split.train.push_back(std::move(r));
    }
  }
  SortByUttId(&split.train);
  SortByUttId(&split.valid);
  return split;
}

RemapConfig RemapConfig::FromJson(const nlohmann::json& j) {
  RemapConfig c;
  if (j.contains("remap")) {
    const auto& remap = j.at("remap");
    if (remap.is_object()) {
      for (const auto& [from, to] : remap.items()) {
        if (!to.is_string()) throw FormatError("remap targets must be strings");
        c.remap.emplace_back(Nfc(from), Nfc(to.get<std::string>()));
      }
    } else if (remap.is_array()) {
      for (const auto& pair : remap) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string()) {
          throw FormatError("remap entries must be [from, to] string pairs");
        }
        c.remap.emplace_back(Nfc(pair[0].get<std::string>()),
                             Nfc(pair[1].get<std::string>()));
      }
    } else {
      throw FormatError("'remap' must be an object or an array");
    }
  }
  for (const auto& [from, to] : c.remap) {
    if (from.empty()) throw FormatError("empty remap pattern");
  }
  if (j.contains("exclude")) {
    for (const auto& e : j.at("exclude")) {
      if (!e.is_string() || e.get<std::string>().empty()) {
        throw FormatError("exclude patterns must be non-empty strings");
      }
      c.exclude.push_back(Nfc(e.get<std::string>()));
    }
  }
  if (j.contains("normalize_g")) c.normalize_g = RequireBool(j, "normalize_g");
  std::stable_sort(c.remap.begin(), c.remap.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first.size() != b.first.size()) {
                       return a.first.size() > b.first.size();
                     }
                     return a.first < b.first;
                   });
  return c;
}

RemapConfig RemapConfig::Load(const std::string& path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

nlohmann::json RemapResult::ReportJson() const {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : report) {
    events.push_back(
        {{"utt_id", e.utt_id},
         {"action", e.action == RemapEvent::Action::kRemap ? "remap" : "drop"},
         {"detail", e.detail}});
  }
  return {{"events", events}, {"kept", manifest.size()}};
}

namespace {

// Single left-to-right pass; at each position the first (longest) matching
// pattern wins, and replaced text is not rescanned.
std::string ApplyRemap(
    const std::string& s,
    const std::vector<std::pair<std::string, std::string>>& remap) {
  if (remap.empty()) return s;
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    bool replaced = false;
    for (const auto& [from, to] : remap) {
      if (s.compare(i, from.size(), from) == 0) {
        out += to;
        i += from.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += s[i++];
  }
  return out;
}

}  // namespace

RemapResult RemapInvalid(const Manifest& manifest, const RemapConfig& config,
                         const Inventory& inventory) {
  RemapResult result;
  for (const auto& record : manifest) {
    std::string t = record.transcription;
    if (config.normalize_g) t = NormalizeG(t);
    t = Nfc(ApplyRemap(t, config.remap));
    if (t != record.transcription) {
      result.report.push_back({record.utt_id, RemapEvent::Action::kRemap,
                               record.transcription + " -> " + t});
    }
    const auto excluded =
        std::find_if(config.exclude.begin(), config.exclude.end(),
                     [&](const std::string& p) {
                       return t.find(p) != std::string::npos;
                     });
    if (excluded != config.exclude.end()) {
      result.report.push_back({record.utt_id, RemapEvent::Action::kDrop,
                               "contains excluded pattern '" + *excluded + "'"});
      continue;
    }
    try {
      TokenizeIpa(inventory, t);
    } catch (const Error& e) {
      result.report.push_back({record.utt_id, RemapEvent::Action::kDrop,
                               std::string("not valid IPA: ") + e.what()});
      continue;
    }
    SegmentRecord kept = record;
    kept.transcription = std::move(t);
    result.manifest.push_back(std::move(kept));
  }
  return result;
}

VocabSpec VocabSpec::FromJson(const nlohmann::json& j,
                              const std::string& blank) {
  if (!j.is_object()) throw FormatError("vocab must be a token -> id object");
  VocabSpec v;
  v.blank = Nfc(blank);
  v.tokens.assign(j.size(), std::string());
  std::vector<bool> filled(j.size(), false);
  for (const auto& [token, id] : j.items()) {
    if (!id.is_number_integer()) throw FormatError("vocab ids must be integers");
    const int64_t i = id.get<int64_t>();
    if (i < 0 || i >= static_cast<int64_t>(j.size()) || filled[i]) {
      throw FormatError("vocab ids must be a dense permutation of 0..n-1");
    }
    filled[i] = true;
    v.tokens[i] = Nfc(token);
  }
  if (std::count(v.tokens.begin(), v.tokens.end(), v.blank) != 1) {
    throw FormatError("blank token '" + v.blank + "' must occur exactly once");
  }
  return v;
}

nlohmann::json VocabSpec::ToJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (size_t i = 0; i < tokens.size(); ++i) j[tokens[i]] = i;
  return j;
}

VocabCleaning CleanVocab(const VocabSpec& vocab,
                         const std::vector<std::string>& transcriptions,
                         const std::vector<std::string>& remove,
                         const std::vector<std::string>& add) {
  std::set<std::string> drop;
  for (const auto& raw : remove) {
    const std::string token = Nfc(raw);
    if (token == vocab.blank) continue;
    if (std::find(vocab.tokens.begin(), vocab.tokens.end(), token) ==
        vocab.tokens.end()) {
      continue;
    }
    const bool used = std::any_of(
        transcriptions.begin(), transcriptions.end(),
        [&](const std::string& t) { return t.find(token) != std::string::npos; });
    if (used) throw RemoveInUse(token);
    drop.insert(token);
  }

  VocabCleaning out;
  out.vocab.blank = vocab.blank;
  for (size_t i = 0; i < vocab.tokens.size(); ++i) {
    const std::string& token = vocab.tokens[i];
    if (drop.count(token)) {
      out.removed.push_back(token);
      continue;
    }
    out.id_map[static_cast<int64_t>(i)] =
        static_cast<int64_t>(out.vocab.tokens.size());
    out.vocab.tokens.push_back(token);
  }
  for (const auto& raw : add) {
    const std::string token = Nfc(raw);
    if (std::find(out.vocab.tokens.begin(), out.vocab.tokens.end(), token) !=
        out.vocab.tokens.end()) {
      continue;
    }
    out.vocab.tokens.push_back(token);
    out.added.push_back(token);
  }
  return out;
}

std::optional<std::string> OnsetPhoneme(const std::string& sentence) {
  static const std::u32string kSkip = U"\"'„“”‚‘’«»([¿¡-–";
  for (const auto& cp : DecodeUtf8(sentence)) {
    if (IsWhitespace(cp.value) || kSkip.find(cp.value) != std::u32string::npos) {
      continue;
    }
    const char32_t c = ToLower(cp.value);
    for (const char* p : kOnsetPhonemes) {
      if (c == static_cast<char32_t>(p[0])) return std::string(p);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

Manifest BuildOnsetTestset(const Manifest& manifest, size_t per_phoneme_n,
                           uint64_t seed) {
  std::map<std::string, Manifest> buckets;
  for (const auto& r : SortedCopy(manifest)) {
    if (!r.analyzable.value_or(false)) continue;
    if (const auto phoneme = OnsetPhoneme(r.sentence)) {
      buckets[*phoneme].push_back(r);
    }
  }

  Manifest out;
  uint64_t index = 0;
  for (const char* phoneme : kOnsetPhonemes) {
    Manifest& bucket = buckets[phoneme];
    if (bucket.size() < per_phoneme_n) {
      throw InsufficientInstances(phoneme, bucket.size(), per_phoneme_n);
    }
    SeededRng rng(DeriveSeed(seed, index++));
    for (auto& r : DrawWithoutReplacement(std::move(bucket), per_phoneme_n, rng)) {
      r.phoneme = phoneme;
      r.split = SplitTag::kTest;
      out.push_back(std::move(r));
    }
  }
  SortByUttId(&out);
  return out;
}

}  // namespace selaug
