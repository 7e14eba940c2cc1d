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

#include "selaug/metrics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "selaug/error.h"
#include "selaug/ipa.h"
#include "selaug/jsonl.h"

namespace selaug {

std::string_view ToString(Phoneme p) {
  switch (p) {
    case Phoneme::kB:
      return "b";
    case Phoneme::kD:
      return "d";
    case Phoneme::kG:
      return "g";
    case Phoneme::kP:
      return "p";
    case Phoneme::kT:
      return "t";
    case Phoneme::kK:
      return "k";
  }
  return "?";
}

Phoneme ParsePhoneme(std::string_view s) {
  // Script g is accepted as a spelling of /g/.
  if (s == "b") return Phoneme::kB;
  if (s == "d") return Phoneme::kD;
  if (s == "g" || s == "\xC9\xA1") return Phoneme::kG;
  if (s == "p") return Phoneme::kP;
  if (s == "t") return Phoneme::kT;
  if (s == "k") return Phoneme::kK;
  throw FormatError("unknown target phoneme '" + std::string(s) + "'");
}

bool IsVoicedPhoneme(Phoneme p) {
  return p == Phoneme::kB || p == Phoneme::kD || p == Phoneme::kG;
}

EvalInstance EvalInstanceFromJson(const nlohmann::json& j) {
  EvalInstance inst;
  inst.utt_id = RequireString(j, "utt_id");
  inst.target = ParsePhoneme(RequireString(j, "phoneme"));
  inst.vot_ms = RequireNumber(j, "vot_ms");
  inst.onset = RequireString(j, "onset");
  inst.model = RequireString(j, "model");
  if (j.contains("analyzable")) inst.analyzable = RequireBool(j, "analyzable");
  return inst;
}

nlohmann::json EvalInstanceToJson(const EvalInstance& inst) {
  return {{"utt_id", inst.utt_id},
          {"phoneme", std::string(ToString(inst.target))},
          {"vot_ms", inst.vot_ms},
          {"onset", inst.onset},
          {"model", inst.model},
          {"analyzable", inst.analyzable}};
}

std::string_view ToString(RealizationClass c) {
  switch (c) {
    case RealizationClass::kVoiced:
      return "Voiced";
    case RealizationClass::kTenuis:
      return "Tenuis";
    case RealizationClass::kAspirated:
      return "Aspirated";
    case RealizationClass::kAmbiguousAspirated:
      return "AmbiguousAspirated";
    case RealizationClass::kNull:
      return "Null";
  }
  return "?";
}

OnsetGroups::OnsetGroups(std::vector<PoaGroup> groups)
    : groups_(std::move(groups)) {
  for (const char* name : {"b", "d", "g", "p", "t", "k"}) {
    const Phoneme p = ParsePhoneme(name);
    size_t owners = 0;
    for (const auto& g : groups_) {
      owners += std::count(g.phonemes.begin(), g.phonemes.end(), p);
    }
    if (owners != 1) {
      throw FormatError(std::string("phoneme /") + name +
                        "/ must belong to exactly one group");
    }
  }
}

OnsetGroups OnsetGroups::FromJson(const nlohmann::json& doc) {
  std::vector<PoaGroup> groups;
  const auto& list = RequireField(doc, "groups");
  if (!list.is_array()) throw FormatError("'groups' must be an array");
  for (const auto& g : list) {
    PoaGroup group;
    group.name = RequireString(g, "name");
    for (const auto& p : RequireField(g, "phonemes")) {
      group.phonemes.push_back(ParsePhoneme(p.get<std::string>()));
    }
    for (const auto& p : RequireField(g, "places")) {
      group.places.insert(ParsePlace(p.get<std::string>()));
    }
    if (g.contains("continuants")) {
      for (const auto& c : g.at("continuants")) {
        group.continuants.insert(c.get<std::string>());
      }
    }
    groups.push_back(std::move(group));
  }
  return OnsetGroups(std::move(groups));
}

OnsetGroups OnsetGroups::Load(const std::string& path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const OnsetGroups& OnsetGroups::Default() {
  static const OnsetGroups groups =
      Load(DefaultDataDir() + "/onset_groups.json");
  return groups;
}

const PoaGroup& OnsetGroups::ForPhoneme(Phoneme p) const {
  for (const auto& g : groups_) {
    if (std::find(g.phonemes.begin(), g.phonemes.end(), p) != g.phonemes.end()) {
      return g;
    }
  }
  throw std::logic_error("phoneme without group");
}

const PoaGroup* OnsetGroups::Find(std::string_view name) const {
  for (const auto& g : groups_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

Classification ClassifyPrediction(const EvalInstance& inst,
                                  const Inventory& inventory,
                                  const OnsetGroups& groups, bool hard_errors) {
  const PoaGroup& group = groups.ForPhoneme(inst.target);
  std::vector<Phone> phones;
  try {
    phones = TokenizeIpa(inventory, inst.onset);
  } catch (const Error& e) {
    if (hard_errors) throw;
    return {RealizationClass::kNull, e.what()};
  }
  if (phones.empty()) return {RealizationClass::kNull, "empty onset"};

  const Phone& first = phones.front();
  const Manner manner = first.features.manner;
  if (group.places.count(first.features.place) == 0 ||
      (manner != Manner::kPlosive && manner != Manner::kAffricate)) {
    return {RealizationClass::kNull, {}};
  }
  const Phonation phonation = PhonationOf(first);
  if (first.Has(DiacriticKind::kAspiration) || phonation == kAspirated) {
    return {RealizationClass::kAspirated, {}};
  }
  if (phonation == kTenuis) {
    // An affricate is itself a stop with a homorganic continuant release.
    if (manner == Manner::kAffricate) {
      return {RealizationClass::kAmbiguousAspirated, {}};
    }
    if (phones.size() > 1 && group.continuants.count(phones[1].base) != 0) {
      return {RealizationClass::kAmbiguousAspirated, {}};
    }
    return {RealizationClass::kTenuis, {}};
  }
  return {RealizationClass::kVoiced, {}};
}

namespace {

struct Counts {
  int64_t total = 0;
  int64_t voiced = 0;
  int64_t tenuis = 0;
  int64_t aspirated = 0;
  int64_t ambiguous = 0;
};

// Non-Null instances whose target passes the filter.
template <typename Pred>
Counts CountNonNull(std::span<const ClassifiedInstance> instances, Pred keep) {
  Counts c;
  for (const auto& ci : instances) {
    if (ci.cls == RealizationClass::kNull || !keep(ci.instance.target)) continue;
    ++c.total;
    switch (ci.cls) {
      case RealizationClass::kVoiced:
        ++c.voiced;
        break;
      case RealizationClass::kTenuis:
        ++c.tenuis;
        break;
      case RealizationClass::kAspirated:
        ++c.aspirated;
        break;
      case RealizationClass::kAmbiguousAspirated:
        ++c.ambiguous;
        break;
      case RealizationClass::kNull:
        break;
    }
  }
  return c;
}

double Percent(int64_t num, int64_t den, const char* metric) {
  if (den <= 0) throw EmptyDenominator(metric);
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double VoicingAcc(std::span<const ClassifiedInstance> instances) {
  int64_t total = 0;
  int64_t correct = 0;
  for (const auto& ci : instances) {
    if (ci.cls == RealizationClass::kNull || !IsVoicedPhoneme(ci.instance.target)) {
      continue;
    }
    ++total;
    const bool predicted_voiced = ci.cls == RealizationClass::kVoiced;
    const bool lead = ci.instance.vot_ms < 0.0;
    if (predicted_voiced == lead) ++correct;
  }
  return Percent(correct, total, "VoicingAcc");
}

double AspPct(std::span<const ClassifiedInstance> instances, ReportMode mode,
              AmbiguityPolicy policy) {
  const Counts c = CountNonNull(
      instances, [](Phoneme p) { return !IsVoicedPhoneme(p); });
  if (mode == ReportMode::kLenient) {
    return Percent(c.aspirated + c.ambiguous, c.total, "Asp%");
  }
  if (policy == AmbiguityPolicy::kExcludeFromDenominator) {
    return Percent(c.aspirated, c.total - c.ambiguous, "Asp%");
  }
  return Percent(c.aspirated, c.total, "Asp%");
}

double TenPct(std::span<const ClassifiedInstance> instances, ReportMode mode,
              AmbiguityPolicy policy) {
  const Counts c = CountNonNull(instances, [](Phoneme) { return true; });
  if (mode == ReportMode::kLenient) return Percent(c.tenuis, c.total, "Ten%");
  if (policy == AmbiguityPolicy::kExcludeFromDenominator) {
    return Percent(c.tenuis, c.total - c.ambiguous, "Ten%");
  }
  return Percent(c.tenuis + c.ambiguous, c.total, "Ten%");
}

double NullPct(std::span<const ClassifiedInstance> instances) {
  if (instances.empty()) return 0.0;
  const auto nulls = std::count_if(
      instances.begin(), instances.end(),
      [](const ClassifiedInstance& ci) { return ci.cls == RealizationClass::kNull; });
  return Percent(nulls, static_cast<int64_t>(instances.size()), "NULL");
}

double RelativeChange(double before, double after) {
  if (before == 0.0) throw ZeroBaseline();
  return 100.0 * (after - before) / before;
}

double McNemarExact(std::span<const bool> first, std::span<const bool> second) {
  if (first.size() != second.size()) {
    throw std::invalid_argument("McNemar: paired vectors differ in length");
  }
  int64_t b = 0;
  int64_t c = 0;
  for (size_t i = 0; i < first.size(); ++i) {
    if (first[i] && !second[i]) ++b;
    if (!first[i] && second[i]) ++c;
  }
  const int64_t n = b + c;
  if (n == 0) return 1.0;
  const int64_t k = std::min(b, c);

  // P(X <= k) for X ~ Binomial(n, 1/2), summed in log space.
  const double log_half_n = -static_cast<double>(n) * std::log(2.0);
  double tail = 0.0;
  for (int64_t i = 0; i <= k; ++i) {
    const double log_choose = std::lgamma(static_cast<double>(n) + 1.0) -
                              std::lgamma(static_cast<double>(i) + 1.0) -
                              std::lgamma(static_cast<double>(n - i) + 1.0);
    tail += std::exp(log_choose + log_half_n);
  }
  return std::min(1.0, 2.0 * tail);
}

double RoundTenth(double percent) { return std::round(percent * 10.0) / 10.0; }

}  // namespace selaug
