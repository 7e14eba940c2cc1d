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

#include "selaug/error.h"

#include <cstdio>

namespace selaug {

std::string CodePointName(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

FormatError::FormatError(const std::string& source, size_t line,
                         const std::string& what)
    : Error(source + ":" + std::to_string(line) + ": " + what),
      source_(source),
      line_(line) {}

InvalidUtf8::InvalidUtf8(size_t byte_offset)
    : Error("invalid UTF-8 at byte " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

UnknownSymbol::UnknownSymbol(char32_t code_point, size_t byte_offset)
    : Error("unknown symbol " + CodePointName(code_point) + " at byte " +
            std::to_string(byte_offset)),
      code_point_(code_point),
      byte_offset_(byte_offset) {}

OrphanDiacritic::OrphanDiacritic(char32_t code_point, size_t byte_offset)
    : Error("diacritic " + CodePointName(code_point) + " at byte " +
            std::to_string(byte_offset) + " has no preceding base"),
      code_point_(code_point),
      byte_offset_(byte_offset) {}

ConflictingPhonation::ConflictingPhonation(size_t byte_offset)
    : Error("phone ending at byte " + std::to_string(byte_offset) +
            " carries both aspiration and breathy voice") {}

NoVoicingCounterpart::NoVoicingCounterpart(const std::string& base)
    : Error("no voicing counterpart registered for '" + base + "'"),
      base_(base) {}

UtteranceMismatch::UtteranceMismatch(const std::string& rm_id,
                                     const std::string& hm_id)
    : Error("utterance mismatch: '" + rm_id + "' vs '" + hm_id + "'") {}

MissingCounterpart::MissingCounterpart(const std::string& utt_id)
    : Error("no helper track for utterance '" + utt_id + "'"),
      utt_id_(utt_id) {}

InsufficientSegments::InsufficientSegments(size_t have, size_t need)
    : Error("need " + std::to_string(need) + " segments, have " +
            std::to_string(have)) {}

InsufficientInstances::InsufficientInstances(const std::string& phoneme,
                                             size_t have, size_t need)
    : Error("phoneme /" + phoneme + "/: need " + std::to_string(need) +
            " instances, have " + std::to_string(have)),
      phoneme_(phoneme),
      have_(have),
      need_(need) {}

RemoveInUse::RemoveInUse(const std::string& token)
    : Error("cannot remove token '" + token + "': still used in the corpus") {}

EmptyDenominator::EmptyDenominator(const std::string& metric)
    : Error(metric + ": no instances in the denominator") {}

}  // namespace selaug
