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

#include "selaug/align.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <tuple>
#include <unordered_map>

#include "selaug/error.h"
#include "selaug/ipa.h"
#include "selaug/jsonl.h"
#include "selaug/parallel.h"
#include "selaug/unicode.h"

namespace selaug {

MappingTable::MappingTable(std::vector<Entry> entries,
                           std::vector<int> window_offsets,
                           const Inventory& inventory)
    : entries_(std::move(entries)) {
  auto check = [&](const std::string& base) {
    const Inventory::Entry* e = inventory.FindBase(base);
    if (e == nullptr) {
      throw FormatError("mapping table symbol '" + base +
                        "' is not in the inventory");
    }
    if (e->manner != Manner::kPlosive && e->manner != Manner::kAffricate) {
      throw FormatError("mapping table symbol '" + base +
                        "' is not a plosive or affricate");
    }
  };
  for (const auto& entry : entries_) {
    if (entry.rm_bases.empty() || entry.hm_bases.empty()) {
      throw FormatError("mapping table entry with an empty side");
    }
    for (const auto& b : entry.rm_bases) check(b);
    for (const auto& b : entry.hm_bases) check(b);
    for (const auto& b : entry.rm_bases) {
      allowed_[b].insert(entry.hm_bases.begin(), entry.hm_bases.end());
    }
  }

  if (window_offsets.empty()) throw FormatError("window_offsets is empty");
  for (int o : window_offsets) {
    if (std::abs(o) > 2) {
      throw FormatError("window offset " + std::to_string(o) +
                        " outside [-2, 2]");
    }
  }
  std::sort(window_offsets.begin(), window_offsets.end(), [](int a, int b) {
    return std::make_tuple(std::abs(a), a) < std::make_tuple(std::abs(b), b);
  });
  window_offsets.erase(std::unique(window_offsets.begin(), window_offsets.end()),
                       window_offsets.end());
  window_offsets_ = std::move(window_offsets);
}

MappingTable MappingTable::FromJson(const nlohmann::json& doc,
                                    const Inventory& inventory) {
  auto symbols = [](const nlohmann::json& arr) {
    if (!arr.is_array()) throw FormatError("expected an array of symbols");
    std::set<std::string> out;
    for (const auto& s : arr) {
      if (!s.is_string()) throw FormatError("symbols must be strings");
      out.insert(Nfc(s.get<std::string>()));
    }
    return out;
  };
  std::vector<Entry> entries;
  const auto& list = RequireField(doc, "entries");
  if (!list.is_array()) throw FormatError("'entries' must be an array");
  for (const auto& e : list) {
    entries.push_back({symbols(RequireField(e, "rm")),
                       symbols(RequireField(e, "hm"))});
  }
  std::vector<int> offsets = {0, 1};
  if (doc.contains("window_offsets")) {
    offsets.clear();
    for (const auto& o : doc.at("window_offsets")) {
      if (!o.is_number_integer()) {
        throw FormatError("window offsets must be integers");
      }
      offsets.push_back(o.get<int>());
    }
  }
  return MappingTable(std::move(entries), std::move(offsets), inventory);
}

MappingTable MappingTable::Load(const std::string& path,
                                const Inventory& inventory) {
  try {
    return FromJson(ReadJsonFile(path), inventory);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

MappingTable MappingTable::Default(const Inventory& inventory) {
  return Load(DefaultDataDir() + "/mapping_table.json", inventory);
}

nlohmann::json MappingTable::ToJson() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : entries_) {
    entries.push_back({{"rm", e.rm_bases}, {"hm", e.hm_bases}});
  }
  return {{"window_offsets", window_offsets_}, {"entries", entries}};
}

bool MappingTable::IsMappable(const std::string& rm_base) const {
  return allowed_.count(rm_base) != 0;
}

const std::set<std::string>* MappingTable::AllowedHmBases(
    const std::string& rm_base) const {
  const auto it = allowed_.find(rm_base);
  return it == allowed_.end() ? nullptr : &it->second;
}

bool ProximityRule::Accepts(const TimedPhone& rm, const TimedPhone& hm) const {
  if (!enabled) return true;
  const int64_t overlap = std::min(rm.end_frame, hm.end_frame) -
                          std::max(rm.start_frame, hm.start_frame) + 1;
  if (overlap >= min_overlap_frames) return true;
  int64_t allowed = 0;
  switch (slack) {
    case Slack::kMaxSpanLength:
      allowed = std::max(rm.length(), hm.length());
      break;
    case Slack::kFixed:
      allowed = fixed_slack_frames;
      break;
    case Slack::kOff:
      return false;
  }
  return std::abs(rm.start_frame - hm.start_frame) <= allowed;
}

std::vector<size_t> MatchCandidates(const PhoneTrack& rm, const PhoneTrack& hm,
                                    size_t rm_index, const MappingTable& table,
                                    const ProximityRule& rule) {
  const TimedPhone& r = rm.phones[rm_index];
  const std::set<std::string>* allowed = table.AllowedHmBases(r.phone.base);
  if (allowed == nullptr) return {};

  struct Candidate {
    bool nonzero_offset;
    int64_t start_distance;
    size_t index;
  };
  std::vector<Candidate> found;
  for (int offset : table.window_offsets()) {
    const int64_t j = static_cast<int64_t>(rm_index) + offset;
    if (j < 0 || j >= static_cast<int64_t>(hm.phones.size())) continue;
    const TimedPhone& h = hm.phones[static_cast<size_t>(j)];
    if (allowed->count(h.phone.base) == 0) continue;
    if (!rule.Accepts(r, h)) continue;
    found.push_back({offset != 0, std::abs(r.start_frame - h.start_frame),
                     static_cast<size_t>(j)});
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a,
                                           const Candidate& b) {
    return std::tie(a.nonzero_offset, a.start_distance, a.index) <
           std::tie(b.nonzero_offset, b.start_distance, b.index);
  });
  std::vector<size_t> out;
  for (const auto& c : found) out.push_back(c.index);
  return out;
}

std::vector<MatchPair> MatchPhones(const PhoneTrack& rm, const PhoneTrack& hm,
                                   const MappingTable& table,
                                   const ProximityRule& rule) {
  if (rm.utt_id != hm.utt_id) throw UtteranceMismatch(rm.utt_id, hm.utt_id);
  std::vector<bool> used(hm.phones.size(), false);
  std::vector<MatchPair> pairs;
  for (size_t i = 0; i < rm.phones.size(); ++i) {
    for (size_t j : MatchCandidates(rm, hm, i, table, rule)) {
      if (used[j]) continue;
      used[j] = true;
      pairs.push_back({i, j, rm.phones[i], hm.phones[j]});
      break;
    }
  }
  return pairs;
}

AugmentedTrack AugmentTrack(const PhoneTrack& rm, const PhoneTrack& hm,
                            const std::vector<MatchPair>& matches,
                            const Inventory& inventory,
                            const AugmentOptions& options) {
  AugmentedTrack out{rm, {}, 0};
  for (const auto& m : matches) {
    Phonation target = PhonationOf(hm.phones.at(m.hm_index).phone);
    if (!options.breathy && target == kBreathyVoiced) target = kVoiced;
    try {
      out.track.phones.at(m.rm_index).phone =
          WithPhonation(inventory, rm.phones.at(m.rm_index).phone, target);
      out.rewritten.push_back(m.rm_index);
    } catch (const NoVoicingCounterpart&) {
      ++out.failed;
    }
  }
  return out;
}

void AugmentationStats::Merge(const AugmentationStats& other) {
  for (const auto& [symbol, n] : other.counts) counts[symbol] += n;
  matched += other.matched;
  unmatched_rm_plosives += other.unmatched_rm_plosives;
  utterances += other.utterances;
}

nlohmann::json AugmentationStats::ToJson() const {
  return {{"counts", counts},
          {"matched", matched},
          {"unmatched_rm_plosives", unmatched_rm_plosives},
          {"utterances", utterances}};
}

AugmentationStats StatsFor(const PhoneTrack& rm, const AugmentedTrack& out,
                           const MappingTable& table) {
  AugmentationStats stats;
  stats.utterances = 1;
  std::vector<bool> rewritten(rm.phones.size(), false);
  for (size_t i : out.rewritten) {
    rewritten[i] = true;
    ++stats.counts[out.track.phones[i].phone.Symbol()];
    ++stats.matched;
  }
  for (size_t i = 0; i < rm.phones.size(); ++i) {
    if (!rewritten[i] && table.IsMappable(rm.phones[i].phone.base)) {
      ++stats.unmatched_rm_plosives;
    }
  }
  return stats;
}

namespace {

PhoneTrack ReadTrackLine(JsonLinesReader& reader, const nlohmann::json& j,
                         const Inventory& inventory) {
  try {
    return PhoneTrackFromJson(j, inventory);
  } catch (const Error& e) {
    reader.Fail(e.what());
  }
}

struct UtteranceResult {
  AugmentedTrack augmented;
  AugmentationStats stats;
  bool aspirated = false;
};

}  // namespace

CorpusAugmentation AugmentCorpus(std::istream& rm_in,
                                 const std::string& rm_name,
                                 std::istream& hm_in,
                                 const std::string& hm_name,
                                 const MappingTable& table,
                                 const Inventory& inventory,
                                 const AugmentOptions& options,
                                 std::ostream* out) {
  std::unordered_map<std::string, PhoneTrack> helper;
  {
    JsonLinesReader reader(hm_in, hm_name);
    nlohmann::json j;
    while (reader.Next(&j)) {
      PhoneTrack t = ReadTrackLine(reader, j, inventory);
      if (helper.count(t.utt_id)) {
        reader.Fail("duplicate utt_id '" + t.utt_id + "'");
      }
      std::string id = t.utt_id;
      helper.emplace(std::move(id), std::move(t));
    }
  }

  CorpusAugmentation result;
  JsonLinesReader reader(rm_in, rm_name);
  std::vector<PhoneTrack> batch;

  auto flush = [&] {
    auto done = ParallelMap(batch, options.workers, [&](const PhoneTrack& rm) {
      const PhoneTrack& hm = helper.at(rm.utt_id);
      UtteranceResult r;
      r.augmented = AugmentTrack(rm, hm,
                                 MatchPhones(rm, hm, table, options.proximity),
                                 inventory, options);
      r.augmented.track.model = ModelTag::kTM;
      r.stats = StatsFor(rm, r.augmented, table);
      for (size_t i : r.augmented.rewritten) {
        if (PhonationOf(r.augmented.track.phones[i].phone) == kAspirated) {
          r.aspirated = true;
        }
      }
      return r;
    });
    for (const auto& r : done) {
      result.stats.Merge(r.stats);
      if (r.aspirated) {
        result.aspirated_utterances.push_back(r.augmented.track.utt_id);
      }
      if (out != nullptr) WriteJsonLine(*out, PhoneTrackToJson(r.augmented.track));
    }
    batch.clear();
  };

  nlohmann::json j;
  while (reader.Next(&j)) {
    PhoneTrack rm = ReadTrackLine(reader, j, inventory);
    if (helper.count(rm.utt_id) == 0) {
      if (!options.skip_missing) throw MissingCounterpart(rm.utt_id);
      result.missing.push_back(rm.utt_id);
      continue;
    }
    batch.push_back(std::move(rm));
    if (batch.size() >= kStreamBatchSize) flush();
  }
  flush();
  return result;
}

CorpusAugmentation AugmentCorpusFiles(const std::string& rm_path,
                                      const std::string& hm_path,
                                      const MappingTable& table,
                                      const Inventory& inventory,
                                      const AugmentOptions& options,
                                      const std::string& out_path) {
  std::ifstream rm(rm_path);
  if (!rm) throw Error("cannot open " + rm_path);
  std::ifstream hm(hm_path);
  if (!hm) throw Error("cannot open " + hm_path);
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  CorpusAugmentation result =
      AugmentCorpus(rm, rm_path, hm, hm_path, table, inventory, options, &out);
  out.flush();
  if (!out) throw Error("write failed: " + out_path);
  return result;
}

std::vector<std::string> PrefilterByAspiration(std::istream& rm_in,
                                               const std::string& rm_name,
                                               std::istream& hm_in,
                                               const std::string& hm_name,
                                               const MappingTable& table,
                                               const Inventory& inventory,
                                               const AugmentOptions& options) {
  return AugmentCorpus(rm_in, rm_name, hm_in, hm_name, table, inventory,
                       options, nullptr)
      .aspirated_utterances;
}

}  // namespace selaug
