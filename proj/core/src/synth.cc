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

#include "selaug/synth.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <string_view>

#include "selaug/error.h"
#include "selaug/ipa.h"
#include "selaug/random.h"

namespace selaug {

namespace {

constexpr std::array<std::string_view, 6> kPlosives = {"p", "b", "t",
                                                       "d", "k", "ɡ"};
constexpr std::array<std::string_view, 9> kFillers = {"a", "e", "i", "o", "u",
                                                      "m", "n", "l", "s"};
constexpr std::array<std::string_view, 5> kVowels = {"a", "e", "i", "o", "u"};

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  }
}

template <size_t N>
std::string_view Pick(SeededRng& rng, const std::array<std::string_view, N>& a) {
  return a[rng.UniformBelow(N)];
}

// HM base for an RM plosive: same place, sometimes retroflex for t/d, with
// the sampled voicing.
std::string HmBase(SeededRng& rng, std::string_view rm_base, bool voiced) {
  std::string_view place = rm_base;
  if ((rm_base == "t" || rm_base == "d") && rng.Bernoulli(0.2)) place = "ʈ";
  if (place == "p" || place == "b") return voiced ? "b" : "p";
  if (place == "t" || place == "d") return voiced ? "d" : "t";
  if (place == "ʈ") return voiced ? "ɖ" : "ʈ";
  return voiced ? "ɡ" : "k";
}

std::string UttId(const char* prefix, size_t index) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%06zu", prefix, index);
  return buf;
}

template <typename T>
void Assign(const nlohmann::json& j, const char* key, T* field) {
  if (j.contains(key)) *field = j.at(key).get<T>();
}

}  // namespace

void ScenarioSpec::Validate() const {
  CheckProbability(plosive_rate, "plosive_rate");
  CheckProbability(hm_aspiration_rate, "hm_aspiration_rate");
  CheckProbability(hm_voicing_rate, "hm_voicing_rate");
  CheckProbability(hm_breathy_rate, "hm_breathy_rate");
  CheckProbability(drop_rate, "drop_rate");
  CheckProbability(hm_shift_rate, "hm_shift_rate");
  if (jitter < 0) throw std::invalid_argument("jitter must be non-negative");
  if (min_phones == 0 || min_phones > max_phones) {
    throw std::invalid_argument("need 0 < min_phones <= max_phones");
  }
  if (!(frame_ms > 0.0)) throw std::invalid_argument("frame_ms must be positive");
}

ScenarioSpec ScenarioSpec::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("scenario must be a JSON object");
  ScenarioSpec s;
  try {
    Assign(j, "seed", &s.seed);
    Assign(j, "n_utterances", &s.n_utterances);
    Assign(j, "plosive_rate", &s.plosive_rate);
    Assign(j, "hm_aspiration_rate", &s.hm_aspiration_rate);
    Assign(j, "hm_voicing_rate", &s.hm_voicing_rate);
    Assign(j, "hm_breathy_rate", &s.hm_breathy_rate);
    Assign(j, "jitter", &s.jitter);
    Assign(j, "drop_rate", &s.drop_rate);
    Assign(j, "hm_shift_rate", &s.hm_shift_rate);
    Assign(j, "min_phones", &s.min_phones);
    Assign(j, "max_phones", &s.max_phones);
    Assign(j, "frame_ms", &s.frame_ms);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("scenario: ") + e.what());
  }
  s.Validate();
  return s;
}

nlohmann::json ScenarioSpec::ToJson() const {
  return {{"seed", seed},
          {"n_utterances", n_utterances},
          {"plosive_rate", plosive_rate},
          {"hm_aspiration_rate", hm_aspiration_rate},
          {"hm_voicing_rate", hm_voicing_rate},
          {"hm_breathy_rate", hm_breathy_rate},
          {"jitter", jitter},
          {"drop_rate", drop_rate},
          {"hm_shift_rate", hm_shift_rate},
          {"min_phones", min_phones},
          {"max_phones", max_phones},
          {"frame_ms", frame_ms}};
}

nlohmann::json GroundTruthMatch::ToJson() const {
  return {{"utt_id", utt_id},
          {"rm_index", rm_index},
          {"hm_index", hm_index},
          {"expected", expected_symbol}};
}

SynthCorpus Generate(const ScenarioSpec& spec, const Inventory& inventory) {
  spec.Validate();
  SynthCorpus out;
  const int64_t j = spec.jitter;
  for (size_t u = 0; u < spec.n_utterances; ++u) {
    SeededRng rng(DeriveSeed(spec.seed, u));
    PhoneTrack rm{UttId("synth_", u), ModelTag::kRM, spec.frame_ms, {}};
    PhoneTrack hm{rm.utt_id, ModelTag::kHM, spec.frame_ms, {}};

    const size_t n = static_cast<size_t>(rng.UniformInt(
        static_cast<int64_t>(spec.min_phones), static_cast<int64_t>(spec.max_phones)));
    const bool shifted = rng.Bernoulli(spec.hm_shift_rate);
    if (shifted) {
      hm.phones.push_back({ParsePhone(inventory, Pick(rng, kVowels)), 0, 1});
    }

    int64_t frame = 2 * j + 4 + rng.UniformInt(0, 1);
    for (size_t i = 0; i < n; ++i) {
      const int64_t len = rng.UniformInt(2, 3);
      const bool plosive = rng.Bernoulli(spec.plosive_rate);
      const std::string_view rm_symbol =
          plosive ? Pick(rng, kPlosives) : Pick(rng, kFillers);
      TimedPhone r{ParsePhone(inventory, rm_symbol), frame, frame + len - 1};
      rm.phones.push_back(r);

      // Shift bounded by the span length keeps the pair within proximity.
      const int64_t bound = std::min(j, len);
      const int64_t shift = bound > 0 ? rng.UniformInt(-bound, bound) : 0;
      TimedPhone h{r.phone, r.start_frame + shift, r.end_frame + shift};
      if (plosive) {
        if (rng.Bernoulli(spec.drop_rate)) {
          h.phone = ParsePhone(inventory, Pick(rng, kVowels));
        } else {
          const bool voiced = rng.Bernoulli(spec.hm_voicing_rate);
          std::string symbol = HmBase(rng, rm_symbol, voiced);
          if (voiced) {
            if (rng.Bernoulli(spec.hm_breathy_rate)) symbol += "ʱ";
          } else if (rng.Bernoulli(spec.hm_aspiration_rate)) {
            symbol += "ʰ";
          }
          h.phone = ParsePhone(inventory, symbol);
          const Phone expected =
              WithPhonation(inventory, r.phone, PhonationOf(h.phone));
          out.truth.push_back({rm.utt_id, i, hm.phones.size(), expected.Symbol()});
        }
      }
      hm.phones.push_back(h);
      frame += len + 2 * j + 3 + rng.UniformInt(0, 1);
    }
    out.rm.push_back(std::move(rm));
    out.hm.push_back(std::move(hm));
  }
  return out;
}

FramePath TrackToFramePath(const PhoneTrack& track, const std::string& blank) {
  FramePath path{track.utt_id, track.frame_ms, blank, {}};
  int64_t frames = 0;
  for (const auto& p : track.phones) frames = std::max(frames, p.end_frame + 2);
  path.labels.assign(static_cast<size_t>(frames), blank);
  for (const auto& p : track.phones) {
    const std::string symbol = p.phone.Symbol();
    for (int64_t f = p.start_frame; f <= p.end_frame; ++f) {
      path.labels[static_cast<size_t>(f)] = symbol;
    }
  }
  return path;
}

EvalScenario EvalScenario::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("eval scenario must be a JSON object");
  EvalScenario s;
  try {
    Assign(j, "seed", &s.seed);
    Assign(j, "per_phoneme_n", &s.per_phoneme_n);
    Assign(j, "models", &s.models);
    Assign(j, "voiced_lead_rate", &s.voiced_lead_rate);
    Assign(j, "null_rate", &s.null_rate);
    Assign(j, "ambiguous_rate", &s.ambiguous_rate);
    Assign(j, "not_analyzable_rate", &s.not_analyzable_rate);
    Assign(j, "aspirated_rate", &s.aspirated_rate);
    Assign(j, "voicing_skill", &s.voicing_skill);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("eval scenario: ") + e.what());
  }
  CheckProbability(s.voiced_lead_rate, "voiced_lead_rate");
  CheckProbability(s.null_rate, "null_rate");
  CheckProbability(s.ambiguous_rate, "ambiguous_rate");
  CheckProbability(s.not_analyzable_rate, "not_analyzable_rate");
  CheckProbability(s.aspirated_rate, "aspirated_rate");
  for (double v : s.voicing_skill) CheckProbability(v, "voicing_skill");
  if (s.models.empty()) throw FormatError("eval scenario needs at least one model");
  return s;
}

std::vector<EvalInstance> GenerateEvalInstances(const EvalScenario& scenario) {
  struct Reference {
    std::string utt_id;
    Phoneme target;
    double vot_ms;
    bool analyzable;
  };
  constexpr Phoneme kOrder[] = {Phoneme::kB, Phoneme::kD, Phoneme::kG,
                                Phoneme::kP, Phoneme::kT, Phoneme::kK};
  std::vector<Reference> refs;
  for (Phoneme p : kOrder) {
    for (size_t i = 0; i < scenario.per_phoneme_n; ++i) {
      SeededRng rng(DeriveSeed(scenario.seed, refs.size()));
      Reference r{"eval_" + std::string(ToString(p)) + UttId("_", i), p, 0.0, true};
      if (IsVoicedPhoneme(p) && rng.Bernoulli(scenario.voiced_lead_rate)) {
        r.vot_ms = rng.UniformReal(-120.0, -20.0);
      } else if (IsVoicedPhoneme(p)) {
        r.vot_ms = rng.UniformReal(5.0, 25.0);
      } else {
        r.vot_ms = rng.UniformReal(10.0, 90.0);
      }
      r.analyzable = !rng.Bernoulli(scenario.not_analyzable_rate);
      refs.push_back(r);
    }
  }

  std::vector<EvalInstance> out;
  for (size_t m = 0; m < scenario.models.size(); ++m) {
    const std::string& model = scenario.models[m];
    const double skill =
        m < scenario.voicing_skill.size() ? scenario.voicing_skill[m] : 0.6;
    for (size_t i = 0; i < refs.size(); ++i) {
      const Reference& r = refs[i];
      SeededRng rng(DeriveSeed(MixSeed(scenario.seed) ^ HashName(model), i));
      std::string_view voiceless;
      std::string_view voiced;
      std::string_view continuant;
      switch (r.target) {
        case Phoneme::kB:
        case Phoneme::kP:
          voiceless = "p", voiced = "b", continuant = "ɸ";
          break;
        case Phoneme::kD:
        case Phoneme::kT:
          voiceless = "t", voiced = "d", continuant = "s";
          break;
        case Phoneme::kG:
        case Phoneme::kK:
          voiceless = "k", voiced = "ɡ", continuant = "x";
          break;
      }
      std::string onset;
      if (rng.Bernoulli(scenario.null_rate)) {
        onset = std::string(Pick(rng, kVowels));
      } else if (IsVoicedPhoneme(r.target)) {
        const bool lead = r.vot_ms < 0.0;
        const bool say_voiced = rng.Bernoulli(skill) ? lead : !lead;
        onset = std::string(say_voiced ? voiced : voiceless);
      } else if (rng.Bernoulli(scenario.aspirated_rate)) {
        onset = std::string(voiceless) + "ʰ";
      } else if (rng.Bernoulli(scenario.ambiguous_rate)) {
        onset = std::string(voiceless) + " " + std::string(continuant);
      } else {
        onset = std::string(voiceless);
      }
      onset += " " + std::string(Pick(rng, kVowels));
      out.push_back({r.utt_id, r.target, r.vot_ms, onset, model, r.analyzable});
    }
  }
  return out;
}

}  // namespace selaug
