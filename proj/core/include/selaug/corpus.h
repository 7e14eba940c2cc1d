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

#ifndef SELAUG_CORPUS_H_
#define SELAUG_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/inventory.h"

namespace selaug {

enum class SplitTag { kTrain, kValid, kTest };

std::string_view ToString(SplitTag tag);
SplitTag ParseSplitTag(std::string_view s);

struct SegmentRecord {
  std::string utt_id;
  std::string language;
  std::string sentence;
  std::string transcription;
  int64_t upvotes = 0;
  int64_t downvotes = 0;
  std::optional<SplitTag> split;
  // Human acoustic judgment; required by the onset test set.
  std::optional<bool> analyzable;
  // Target phoneme assigned by BuildOnsetTestset.
  std::optional<std::string> phoneme;
  // Unrecognized fields (provenance tags and the like) pass through.
  nlohmann::json extra = nlohmann::json::object();

  friend bool operator==(const SegmentRecord&, const SegmentRecord&) = default;
};

using Manifest = std::vector<SegmentRecord>;

SegmentRecord SegmentRecordFromJson(const nlohmann::json& j);
nlohmann::json SegmentRecordToJson(const SegmentRecord& r);

// Reads a manifest; throws FormatError on malformed lines or duplicate ids.
Manifest ReadManifest(std::istream& in, const std::string& source_name);
Manifest ReadManifestFile(const std::string& path);
void WriteManifest(std::ostream& out, const Manifest& manifest);
void SortByUttId(Manifest* manifest);

// Drops records with more than `max_downvotes` downvotes.
Manifest FilterDownvoted(const Manifest& manifest, int64_t max_downvotes = 0);

// Uniform sample of n records without replacement, ordered by utt_id. With
// per_language set, n records are drawn from every language separately.
// Throws InsufficientSegments.
Manifest SampleSegments(const Manifest& manifest, size_t n, uint64_t seed,
                        bool per_language = false);

struct TrainValidSplit {
  Manifest train;
  Manifest valid;
};

// |valid| = round(fraction * |manifest|); both halves sorted by utt_id and
// tagged. fraction must lie in (0, 1).
TrainValidSplit SplitValidation(const Manifest& manifest, double fraction,
                                uint64_t seed);

struct RemapConfig {
  // Literal substring replacements, applied longest pattern first.
  std::vector<std::pair<std::string, std::string>> remap;
  std::vector<std::string> exclude;
  bool normalize_g = true;

  static RemapConfig FromJson(const nlohmann::json& j);
  static RemapConfig Load(const std::string& path);
};

struct RemapEvent {
  std::string utt_id;
  enum class Action { kRemap, kDrop } action;
  std::string detail;
};

struct RemapResult {
  Manifest manifest;
  std::vector<RemapEvent> report;
  nlohmann::json ReportJson() const;
};

// Rewrites transcriptions per the config, then drops records still matching
// an exclude pattern or failing IPA tokenization.
RemapResult RemapInvalid(const Manifest& manifest, const RemapConfig& config,
                         const Inventory& inventory);

// Model output vocabulary: tokens in id order plus the blank token.
struct VocabSpec {
  std::vector<std::string> tokens;
  std::string blank;

  // {"token": id, ...}; ids must be a dense permutation of 0..n-1.
  static VocabSpec FromJson(const nlohmann::json& j, const std::string& blank);
  nlohmann::json ToJson() const;
  friend bool operator==(const VocabSpec&, const VocabSpec&) = default;
};

struct VocabCleaning {
  VocabSpec vocab;
  std::map<int64_t, int64_t> id_map;  // old id -> new id for kept tokens
  std::vector<std::string> removed;
  std::vector<std::string> added;
};

// Removes listed tokens that never occur in the corpus transcriptions and
// appends the added tokens that are missing. Ids are reassigned densely in
// the original order. Throws RemoveInUse if a listed token is still used.
VocabCleaning CleanVocab(const VocabSpec& vocab,
                         const std::vector<std::string>& transcriptions,
                         const std::vector<std::string>& remove,
                         const std::vector<std::string>& add);

// The six plosive phonemes of the onset test set.
inline constexpr const char* kOnsetPhonemes[] = {"b", "d", "g", "p", "t", "k"};

// Onset phoneme for a sentence whose lower-cased first letter is one of
// b d g p t k (leading spaces and opening quotes are skipped).
std::optional<std::string> OnsetPhoneme(const std::string& sentence);

// Keeps absolute-onset records, then draws per_phoneme_n analyzable records
// per phoneme. Output sorted by utt_id with the phoneme and the test split
// set. Throws InsufficientInstances.
Manifest BuildOnsetTestset(const Manifest& manifest, size_t per_phoneme_n,
                           uint64_t seed);

}  // namespace selaug

#endif  // SELAUG_CORPUS_H_
