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

#ifndef SELAUG_IPA_H_
#define SELAUG_IPA_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selaug/inventory.h"

namespace selaug {

struct Diacritic {
  char32_t mark;
  DiacriticKind kind;

  friend bool operator==(const Diacritic&, const Diacritic&) = default;
};

// One IPA segment. The base may span several code points (tie-bar
// affricates); diacritics keep their input order.
struct Phone {
  std::string base;
  std::vector<Diacritic> diacritics;
  PhoneFeatures features;

  bool Has(DiacriticKind kind) const;
  // base + diacritics, NFC.
  std::string Symbol() const;

  // Features are derived from base and diacritics, so they take no part in
  // identity.
  friend bool operator==(const Phone& a, const Phone& b) {
    return a.base == b.base && a.diacritics == b.diacritics;
  }
};

// A phone together with the code point range [begin, end) it was read from.
struct SegmentedPhone {
  Phone phone;
  size_t begin;
  size_t end;
};

// Maximal-munch segmentation of an already normalized code point sequence.
// Whitespace ends the current phone and is dropped. Byte offsets in errors
// are taken from `offsets` when given (one per code point), otherwise they
// are code point indices.
std::vector<SegmentedPhone> SegmentCodePoints(
    const Inventory& inventory, std::u32string_view text,
    std::span<const size_t> offsets = {});

// NFC-normalizes `s` and segments it into phones. Throws UnknownSymbol,
// OrphanDiacritic, ConflictingPhonation or InvalidUtf8.
std::vector<Phone> TokenizeIpa(const Inventory& inventory, std::string_view s);

// Tokenizes a string that must hold exactly one phone.
Phone ParsePhone(const Inventory& inventory, std::string_view s);

// Concatenation of every phone's symbol, NFC.
std::string Serialize(std::span<const Phone> phones);

// [voiced] comes from the base unless a voiceless diacritic is present;
// [spread glottis] is set iff the phone carries ʰ or ʱ.
Phonation PhonationOf(const Phone& p);

// Rebuilds the phone with the requested phonation: the base moves within its
// voicing pair, phonation diacritics are replaced, everything else is kept.
// Throws NoVoicingCounterpart when the base has no registered voicing pair.
Phone WithPhonation(const Inventory& inventory, const Phone& p,
                    const Phonation& target);

// Replaces every Latin small letter g (U+0067) with script g (U+0261).
std::string NormalizeG(std::string_view s);

// Derives place/manner/phonation for a base entry plus diacritics.
PhoneFeatures DeriveFeatures(const Inventory::Entry& entry,
                             std::span<const Diacritic> diacritics);

}  // namespace selaug

#endif  // SELAUG_IPA_H_
