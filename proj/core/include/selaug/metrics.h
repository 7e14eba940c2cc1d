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

#ifndef SELAUG_METRICS_H_
#define SELAUG_METRICS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/inventory.h"

namespace selaug {

enum class Phoneme { kB, kD, kG, kP, kT, kK };

std::string_view ToString(Phoneme p);
Phoneme ParsePhoneme(std::string_view s);
bool IsVoicedPhoneme(Phoneme p);

// One annotated absolute-onset plosive and a model's prediction for it.
struct EvalInstance {
  std::string utt_id;
  Phoneme target = Phoneme::kP;
  double vot_ms = 0.0;  // negative = voicing lead
  std::string onset;    // first phones of the prediction
  std::string model;
  bool analyzable = true;

  friend bool operator==(const EvalInstance&, const EvalInstance&) = default;
};

EvalInstance EvalInstanceFromJson(const nlohmann::json& j);
nlohmann::json EvalInstanceToJson(const EvalInstance& inst);

enum class RealizationClass {
  kVoiced,
  kTenuis,
  kAspirated,
  kAmbiguousAspirated,
  kNull,
};

std::string_view ToString(RealizationClass c);

// A place-of-articulation group: its phonemes, the places a prediction may
// use, and the homorganic voiceless continuants (plus h) that can stand for
// aspiration after a tenuis plosive.
struct PoaGroup {
  std::string name;
  std::vector<Phoneme> phonemes;
  std::set<Place> places;
  std::set<std::string> continuants;
};

class OnsetGroups {
 public:
  explicit OnsetGroups(std::vector<PoaGroup> groups);
  static OnsetGroups FromJson(const nlohmann::json& doc);
  static OnsetGroups Load(const std::string& path);
  // data/onset_groups.json.
  static const OnsetGroups& Default();

  const PoaGroup& ForPhoneme(Phoneme p) const;
  const PoaGroup* Find(std::string_view name) const;
  const std::vector<PoaGroup>& groups() const { return groups_; }

 private:
  std::vector<PoaGroup> groups_;
};

struct Classification {
  RealizationClass cls;
  std::string diagnostic;  // set when the onset failed to tokenize
};

// Total over all inputs. Untokenizable onsets yield Null with a diagnostic,
// or rethrow when hard_errors is set.
Classification ClassifyPrediction(const EvalInstance& inst,
                                  const Inventory& inventory,
                                  const OnsetGroups& groups,
                                  bool hard_errors = false);

struct ClassifiedInstance {
  EvalInstance instance;
  RealizationClass cls;
};

enum class ReportMode { kStrict, kLenient };

// How ambiguous realizations enter the strict figures. kAsTenuis counts them
// as not aspirated; kExcludeFromDenominator removes them from the strict
// denominators instead (alternative reading, unverified).
enum class AmbiguityPolicy { kAsTenuis, kExcludeFromDenominator };

// Percent of non-Null /b d g/ whose voiced/voiceless prediction agrees with
// the sign of VOT (VOT == 0 counts as voiceless).
double VoicingAcc(std::span<const ClassifiedInstance> instances);
// Percent of non-Null /p t k/ predicted aspirated.
double AspPct(std::span<const ClassifiedInstance> instances, ReportMode mode,
              AmbiguityPolicy policy = AmbiguityPolicy::kAsTenuis);
// Percent of non-Null instances (all six phonemes) in the tenuis class.
double TenPct(std::span<const ClassifiedInstance> instances, ReportMode mode,
              AmbiguityPolicy policy = AmbiguityPolicy::kAsTenuis);
double NullPct(std::span<const ClassifiedInstance> instances);

// 100 * (after - before) / before. Throws ZeroBaseline.
double RelativeChange(double before, double after);

// Exact two-sided McNemar test on paired correctness flags. Returns 1.0 when
// there are no discordant pairs. Throws std::invalid_argument on a length
// mismatch.
double McNemarExact(std::span<const bool> first, std::span<const bool> second);

// Rounds half away from zero to one decimal, the precision of all reports.
double RoundTenth(double percent);

}  // namespace selaug

#endif  // SELAUG_METRICS_H_
