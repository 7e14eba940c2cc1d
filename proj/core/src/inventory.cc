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

#include "selaug/inventory.h"

#include <array>
#include <cstdlib>

#include "selaug/error.h"
#include "selaug/jsonl.h"
#include "selaug/unicode.h"

namespace selaug {

namespace {

constexpr std::array<std::pair<Place, std::string_view>, 11> kPlaceNames{{
    {Place::kBilabial, "bilabial"},
    {Place::kLabiodental, "labiodental"},
    {Place::kDental, "dental"},
    {Place::kAlveolar, "alveolar"},
    {Place::kRetroflex, "retroflex"},
    {Place::kPostalveolar, "postalveolar"},
    {Place::kPalatal, "palatal"},
    {Place::kVelar, "velar"},
    {Place::kUvular, "uvular"},
    {Place::kGlottal, "glottal"},
    {Place::kOther, "other"},
}};

constexpr std::array<std::pair<Manner, std::string_view>, 10> kMannerNames{{
    {Manner::kPlosive, "plosive"},
    {Manner::kNasal, "nasal"},
    {Manner::kFricative, "fricative"},
    {Manner::kAffricate, "affricate"},
    {Manner::kApproximant, "approximant"},
    {Manner::kTrill, "trill"},
    {Manner::kTapFlap, "tap_flap"},
    {Manner::kLateral, "lateral"},
    {Manner::kVowel, "vowel"},
    {Manner::kOther, "other"},
}};

constexpr std::array<std::pair<DiacriticKind, std::string_view>, 8>
    kDiacriticNames{{
        {DiacriticKind::kAspiration, "aspiration"},
        {DiacriticKind::kBreathy, "breathy"},
        {DiacriticKind::kVoiceless, "voiceless"},
        {DiacriticKind::kDental, "dental"},
        {DiacriticKind::kLength, "length"},
        {DiacriticKind::kSyllabic, "syllabic"},
        {DiacriticKind::kNasalization, "nasalization"},
        {DiacriticKind::kOther, "other"},
    }};

template <typename E, size_t N>
std::string_view NameOf(const std::array<std::pair<E, std::string_view>, N>& t,
                        E value) {
  for (const auto& [e, name] : t) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, size_t N>
E ParseName(const std::array<std::pair<E, std::string_view>, N>& t,
            std::string_view s, const char* what) {
  for (const auto& [e, name] : t) {
    if (name == s) return e;
  }
  throw FormatError(std::string("unknown ") + what + " '" + std::string(s) +
                    "'");
}

}  // namespace

std::string_view ToString(Place p) { return NameOf(kPlaceNames, p); }
std::string_view ToString(Manner m) { return NameOf(kMannerNames, m); }
std::string_view ToString(DiacriticKind k) { return NameOf(kDiacriticNames, k); }

Place ParsePlace(std::string_view s) { return ParseName(kPlaceNames, s, "place"); }
Manner ParseManner(std::string_view s) {
  return ParseName(kMannerNames, s, "manner");
}
DiacriticKind ParseDiacriticKind(std::string_view s) {
  return ParseName(kDiacriticNames, s, "diacritic kind");
}

std::string_view PhonationName(const Phonation& p) {
  if (p.voiced) return p.spread_glottis ? "BreathyVoiced" : "Voiced";
  return p.spread_glottis ? "Aspirated" : "Tenuis";
}

Inventory Inventory::FromJson(const nlohmann::json& doc) {
  Inventory inv;
  const auto& phones = RequireField(doc, "phones");
  if (!phones.is_array()) throw FormatError("'phones' must be an array");

  for (const auto& p : phones) {
    Entry e;
    e.symbol = Nfc(RequireString(p, "symbol"));
    e.place = ParsePlace(RequireString(p, "place"));
    e.manner = ParseManner(RequireString(p, "manner"));
    e.voiced = RequireBool(p, "voiced");
    if (e.symbol.empty()) throw FormatError("empty phone symbol");
    if (e.symbol.find('g') != std::string::npos) {
      throw FormatError("inventory must use U+0261 script g, not Latin 'g'");
    }
    std::u32string key = ToU32(e.symbol);
    if (inv.by_symbol_.count(key) != 0) {
      throw FormatError("duplicate phone symbol '" + e.symbol + "'");
    }
    inv.max_base_length_ = std::max(inv.max_base_length_, key.size());
    inv.by_symbol_.emplace(std::move(key), inv.entries_.size());
    inv.entries_.push_back(std::move(e));
  }

  const auto& diacritics = RequireField(doc, "diacritics");
  if (!diacritics.is_object()) {
    throw FormatError("'diacritics' must be an object");
  }
  for (const auto& [symbol, kind] : diacritics.items()) {
    const std::u32string cps = ToU32(Nfc(symbol));
    if (cps.size() != 1) {
      throw FormatError("diacritic '" + symbol + "' must be one code point");
    }
    if (!kind.is_string()) throw FormatError("diacritic kind must be a string");
    if (inv.by_symbol_.count(cps)) {
      throw FormatError("'" + symbol + "' is both a base and a diacritic");
    }
    inv.diacritics_[cps[0]] = ParseDiacriticKind(kind.get<std::string>());
  }
  if (inv.FindDiacritic(kAspirationMark) != DiacriticKind::kAspiration ||
      inv.FindDiacritic(kBreathyMark) != DiacriticKind::kBreathy) {
    throw FormatError("inventory must define ʰ as aspiration and ʱ as breathy");
  }

  if (doc.contains("voicing_pairs")) {
    for (const auto& pair : doc.at("voicing_pairs")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw FormatError("voicing pair must be [voiceless, voiced]");
      }
      const std::string a = Nfc(pair[0].get<std::string>());
      const std::string b = Nfc(pair[1].get<std::string>());
      const Entry* ea = inv.FindBase(a);
      const Entry* eb = inv.FindBase(b);
      if (ea == nullptr || eb == nullptr) {
        throw FormatError("voicing pair " + a + "/" + b +
                          " names a symbol outside the inventory");
      }
      if (ea->voiced || !eb->voiced) {
        throw FormatError("voicing pair " + a + "/" + b +
                          " must list the voiceless member first");
      }
      if (ea->place != eb->place || ea->manner != eb->manner) {
        throw FormatError("voicing pair " + a + "/" + b +
                          " differs in place or manner");
      }
      if (inv.counterpart_.count(a) || inv.counterpart_.count(b)) {
        throw FormatError("symbol in more than one voicing pair: " + a + "/" +
                          b);
      }
      inv.counterpart_[a] = b;
      inv.counterpart_[b] = a;
      inv.voicing_pairs_.emplace_back(a, b);
    }
  }
  return inv;
}

Inventory Inventory::Load(const std::string& path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

const Inventory& Inventory::Default() {
  static const Inventory inv = Load(DefaultDataDir() + "/inventory.json");
  return inv;
}

const Inventory::Entry* Inventory::FindBase(std::u32string_view symbol) const {
  const auto it = by_symbol_.find(std::u32string(symbol));
  return it == by_symbol_.end() ? nullptr : &entries_[it->second];
}

const Inventory::Entry* Inventory::FindBase(std::string_view utf8) const {
  return FindBase(ToU32(utf8));
}

std::optional<DiacriticKind> Inventory::FindDiacritic(char32_t cp) const {
  const auto it = diacritics_.find(cp);
  if (it == diacritics_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Inventory::VoicingCounterpart(
    std::string_view base) const {
  const auto it = counterpart_.find(std::string(base));
  if (it == counterpart_.end()) return std::nullopt;
  return it->second;
}

std::string DefaultDataDir() {
  if (const char* dir = std::getenv("SELAUG_DATA_DIR"); dir && *dir) {
    return dir;
  }
#ifdef SELAUG_DEFAULT_DATA_DIR
  return SELAUG_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace selaug
