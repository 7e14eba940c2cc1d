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

#ifndef SELAUG_ALIGN_H_
#define SELAUG_ALIGN_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/ctc.h"
#include "selaug/inventory.h"

namespace selaug {

// Which helper-model bases may stand in for which reference-model bases, and
// which phone index offsets j - i are searched.
class MappingTable {
 public:
  struct Entry {
    std::set<std::string> rm_bases;
    std::set<std::string> hm_bases;
  };

  // Validates symbols against the inventory (plosives and affricates only)
  // and offsets (non-empty, |offset| <= 2). Throws FormatError.
  MappingTable(std::vector<Entry> entries, std::vector<int> window_offsets,
               const Inventory& inventory);

  static MappingTable FromJson(const nlohmann::json& doc,
                               const Inventory& inventory);
  static MappingTable Load(const std::string& path, const Inventory& inventory);
  // data/mapping_table.json.
  static MappingTable Default(const Inventory& inventory);

  nlohmann::json ToJson() const;

  // True if the RM base occurs in some entry.
  bool IsMappable(const std::string& rm_base) const;
  // HM bases admitted for the RM base (union over all entries listing it).
  const std::set<std::string>* AllowedHmBases(const std::string& rm_base) const;

  const std::vector<Entry>& entries() const { return entries_; }
  // Sorted, offset 0 first, then by |offset|, then ascending.
  const std::vector<int>& window_offsets() const { return window_offsets_; }

 private:
  std::vector<Entry> entries_;
  std::vector<int> window_offsets_;
  std::map<std::string, std::set<std::string>> allowed_;
};

// Timestamp gate applied on top of the index window. Two spans qualify when
// they overlap by at least `min_overlap_frames` or, with slack enabled, when
// their start frames differ by no more than the slack.
struct ProximityRule {
  enum class Slack { kMaxSpanLength, kFixed, kOff };

  bool enabled = true;
  int64_t min_overlap_frames = 1;
  Slack slack = Slack::kMaxSpanLength;
  int64_t fixed_slack_frames = 0;

  bool Accepts(const TimedPhone& rm, const TimedPhone& hm) const;
};

struct MatchPair {
  size_t rm_index;
  size_t hm_index;
  TimedPhone rm_phone;
  TimedPhone hm_phone;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// Candidate HM indices for RM index i, in preference order (offset 0 first,
// then smaller start-frame distance, then smaller index). Ignores one-to-one
// use; exposed for tests and diagnostics.
std::vector<size_t> MatchCandidates(const PhoneTrack& rm, const PhoneTrack& hm,
                                    size_t rm_index, const MappingTable& table,
                                    const ProximityRule& rule = {});

// Greedy left-to-right one-to-one matching. Throws UtteranceMismatch.
std::vector<MatchPair> MatchPhones(const PhoneTrack& rm, const PhoneTrack& hm,
                                   const MappingTable& table,
                                   const ProximityRule& rule = {});

struct AugmentOptions {
  bool breathy = true;
  ProximityRule proximity;
  bool skip_missing = false;
  int workers = 1;
};

struct AugmentedTrack {
  PhoneTrack track;
  // RM indices whose phonation was overwritten.
  std::vector<size_t> rewritten;
  // Matches that could not be applied (no voicing counterpart).
  size_t failed = 0;
};

// Copies `rm` and overwrites the phonation of each matched RM phone with the
// HM phone's phonation; place comes from RM. With breathy transfer disabled a
// breathy-voiced target is written as plain voiced.
AugmentedTrack AugmentTrack(const PhoneTrack& rm, const PhoneTrack& hm,
                            const std::vector<MatchPair>& matches,
                            const Inventory& inventory,
                            const AugmentOptions& options = {});

struct AugmentationStats {
  std::map<std::string, int64_t> counts;  // produced symbol -> occurrences
  int64_t matched = 0;
  int64_t unmatched_rm_plosives = 0;
  int64_t utterances = 0;

  void Merge(const AugmentationStats& other);
  nlohmann::json ToJson() const;
  friend bool operator==(const AugmentationStats&,
                         const AugmentationStats&) = default;
};

// Stats contribution of a single augmented utterance.
AugmentationStats StatsFor(const PhoneTrack& rm, const AugmentedTrack& out,
                           const MappingTable& table);

struct CorpusAugmentation {
  AugmentationStats stats;
  std::vector<std::string> missing;  // RM utt_ids without an HM track
  // utt_ids with at least one aspirated output phone produced by a match.
  std::vector<std::string> aspirated_utterances;
};

// Streams RM tracks, joins each with its HM track by utt_id and writes the
// augmented tracks in RM order. The HM stream is indexed in memory.
// Missing counterparts throw MissingCounterpart unless skip_missing is set,
// in which case the utterance is left out of the output and listed.
CorpusAugmentation AugmentCorpus(std::istream& rm_in,
                                 const std::string& rm_name,
                                 std::istream& hm_in,
                                 const std::string& hm_name,
                                 const MappingTable& table,
                                 const Inventory& inventory,
                                 const AugmentOptions& options,
                                 std::ostream* out);

CorpusAugmentation AugmentCorpusFiles(const std::string& rm_path,
                                      const std::string& hm_path,
                                      const MappingTable& table,
                                      const Inventory& inventory,
                                      const AugmentOptions& options,
                                      const std::string& out_path);

// utt_ids whose matches produced at least one aspirated phone.
std::vector<std::string> PrefilterByAspiration(std::istream& rm_in,
                                               const std::string& rm_name,
                                               std::istream& hm_in,
                                               const std::string& hm_name,
                                               const MappingTable& table,
                                               const Inventory& inventory,
                                               const AugmentOptions& options);

}  // namespace selaug

#endif  // SELAUG_ALIGN_H_
