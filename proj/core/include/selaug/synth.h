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

#ifndef SELAUG_SYNTH_H_
#define SELAUG_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/ctc.h"
#include "selaug/inventory.h"
#include "selaug/metrics.h"

namespace selaug {

struct ScenarioSpec {
  uint64_t seed = 0;
  size_t n_utterances = 100;
  double plosive_rate = 0.4;
  double hm_aspiration_rate = 0.5;
  double hm_voicing_rate = 0.3;
  double hm_breathy_rate = 0.1;
  int64_t jitter = 0;   // max frame shift of an HM span
  double drop_rate = 0.0;
  // Probability that the HM track starts with one extra filler phone, which
  // moves every counterpart to offset +1.
  double hm_shift_rate = 0.0;
  size_t min_phones = 4;
  size_t max_phones = 10;
  double frame_ms = 20.0;

  // Throws std::invalid_argument for probabilities outside [0, 1], negative
  // jitter or an empty phone range.
  void Validate() const;
  static ScenarioSpec FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

struct GroundTruthMatch {
  std::string utt_id;
  size_t rm_index;
  size_t hm_index;
  // Expected augmented RM phone with breathy transfer on.
  std::string expected_symbol;

  friend bool operator==(const GroundTruthMatch&,
                         const GroundTruthMatch&) = default;
  nlohmann::json ToJson() const;
};

struct SynthCorpus {
  std::vector<PhoneTrack> rm;
  std::vector<PhoneTrack> hm;
  std::vector<GroundTruthMatch> truth;
};

// Utterance k draws from its own generator seeded with DeriveSeed(seed, k),
// so the corpus does not depend on generation order. utt_ids sort in
// generation order.
SynthCorpus Generate(const ScenarioSpec& spec, const Inventory& inventory);

// Renders a track as a per-frame label path that decodes back to it: each
// code point of a phone takes one frame, the last one fills the rest of the
// span, and blank fills the gaps. Needs spans at least as long as their
// symbols and gaps between phones that repeat a character.
FramePath TrackToFramePath(const PhoneTrack& track, const std::string& blank);

struct EvalScenario {
  uint64_t seed = 0;
  size_t per_phoneme_n = 40;
  std::vector<std::string> models = {"BM", "TM"};
  double voiced_lead_rate = 0.3;  // share of /b d g/ with negative VOT
  double null_rate = 0.05;
  double ambiguous_rate = 0.1;
  double not_analyzable_rate = 0.0;
  double aspirated_rate = 0.5;  // share of /p t k/ predicted with aspiration
  // Probability of predicting the reference voicing of /b d g/, one entry per
  // model; models without an entry use 0.6.
  std::vector<double> voicing_skill = {0.4, 0.8};

  static EvalScenario FromJson(const nlohmann::json& j);
};

// Random annotated instances with per-model predictions; one instance per
// (utterance, model), utterances shared across models.
std::vector<EvalInstance> GenerateEvalInstances(const EvalScenario& scenario);

}  // namespace selaug

#endif  // SELAUG_SYNTH_H_
