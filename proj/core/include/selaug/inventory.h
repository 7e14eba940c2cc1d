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

#ifndef SELAUG_INVENTORY_H_
#define SELAUG_INVENTORY_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace selaug {

enum class Place {
  kBilabial,
  kLabiodental,
  kDental,
  kAlveolar,
  kRetroflex,
  kPostalveolar,
  kPalatal,
  kVelar,
  kUvular,
  kGlottal,
  kOther,
};

enum class Manner {
  kPlosive,
  kNasal,
  kFricative,
  kAffricate,
  kApproximant,
  kTrill,
  kTapFlap,
  kLateral,
  kVowel,
  kOther,
};

enum class DiacriticKind {
  kAspiration,
  kBreathy,
  kVoiceless,
  kDental,
  kLength,
  kSyllabic,
  kNasalization,
  kOther,
};

std::string_view ToString(Place p);
std::string_view ToString(Manner m);
std::string_view ToString(DiacriticKind k);
// These throw FormatError on unknown names.
Place ParsePlace(std::string_view s);
Manner ParseManner(std::string_view s);
DiacriticKind ParseDiacriticKind(std::string_view s);

// Laryngeal setting on the [voiced] x [spread glottis] grid.
struct Phonation {
  bool voiced = false;
  bool spread_glottis = false;

  friend bool operator==(const Phonation&, const Phonation&) = default;
};

inline constexpr Phonation kTenuis{false, false};
inline constexpr Phonation kAspirated{false, true};
inline constexpr Phonation kVoiced{true, false};
inline constexpr Phonation kBreathyVoiced{true, true};

std::string_view PhonationName(const Phonation& p);

struct PhoneFeatures {
  Place place = Place::kOther;
  Manner manner = Manner::kOther;
  Phonation phonation;

  friend bool operator==(const PhoneFeatures&, const PhoneFeatures&) = default;
};

// Canonical phonation diacritics written by WithPhonation.
inline constexpr char32_t kAspirationMark = U'ʰ';  // ʰ
inline constexpr char32_t kBreathyMark = U'ʱ';     // ʱ

// Symbol table for IPA segmentation: base symbols with their features,
// homorganic voicing pairs and the diacritic semantics. Immutable after
// construction, so one instance can be shared across threads.
class Inventory {
 public:
  struct Entry {
    std::string symbol;  // NFC UTF-8
    Place place;
    Manner manner;
    bool voiced;
  };

  Inventory() = default;

  // Validates and builds from the JSON inventory document. Throws FormatError.
  static Inventory FromJson(const nlohmann::json& doc);
  static Inventory Load(const std::string& path);
  // The inventory shipped with the library (data/inventory.json).
  static const Inventory& Default();

  const Entry* FindBase(std::u32string_view symbol) const;
  const Entry* FindBase(std::string_view utf8_symbol) const;
  std::optional<DiacriticKind> FindDiacritic(char32_t cp) const;
  // The other member of the voicing pair, if the base belongs to one.
  std::optional<std::string> VoicingCounterpart(std::string_view base) const;

  // Longest base symbol, in code points.
  size_t max_base_length() const { return max_base_length_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::pair<std::string, std::string>>& voicing_pairs() const {
    return voicing_pairs_;
  }
  const std::map<char32_t, DiacriticKind>& diacritics() const {
    return diacritics_;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::u32string, size_t> by_symbol_;
  std::map<char32_t, DiacriticKind> diacritics_;
  std::vector<std::pair<std::string, std::string>> voicing_pairs_;
  std::unordered_map<std::string, std::string> counterpart_;
  size_t max_base_length_ = 0;
};

// Directory holding the shipped data files. Honors SELAUG_DATA_DIR.
std::string DefaultDataDir();

}  // namespace selaug

#endif  // SELAUG_INVENTORY_H_
