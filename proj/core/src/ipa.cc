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

#include "selaug/ipa.h"

#include <algorithm>

#include "selaug/error.h"
#include "selaug/unicode.h"

namespace selaug {

namespace {

bool IsPhonationKind(DiacriticKind k) {
  return k == DiacriticKind::kAspiration || k == DiacriticKind::kBreathy ||
         k == DiacriticKind::kVoiceless;
}

// Segmentation state for one call.
class Segmenter {
 public:
  Segmenter(const Inventory& inventory, std::u32string_view text,
            std::span<const size_t> offsets)
      : inv_(inventory), text_(text), offsets_(offsets) {}

  std::vector<SegmentedPhone> Run() {
    size_t i = 0;
    while (i < text_.size()) {
      const char32_t c = text_[i];
      if (IsWhitespace(c)) {
        open_ = false;
        ++i;
        continue;
      }
      if (const Match m = MatchBase(text_.substr(i)); m.length > 0) {
        StartPhone(m.symbol, i, i + m.length);
        for (char32_t mark : m.marks) {
          const auto kind = inv_.FindDiacritic(mark);
          if (!kind) throw UnknownSymbol(text_[i + m.length - 1], ByteOffset(i + m.length - 1));
          Attach(mark, *kind, i + m.length - 1, i + m.length);
        }
        i += m.length;
        continue;
      }
      if (const auto kind = inv_.FindDiacritic(c)) {
        Attach(c, *kind, i, i + 1);
        ++i;
        continue;
      }
      ConsumeDecomposed(c, i);
      ++i;
    }
    return std::move(out_);
  }

 private:
  size_t ByteOffset(size_t index) const {
    if (offsets_.empty()) return index;
    return index < offsets_.size() ? offsets_[index] : offsets_.back();
  }

  struct Match {
    size_t length = 0;       // code points consumed
    std::u32string symbol;   // matched base
    std::u32string marks;    // combining marks split off the last code point
  };

  // Longest base symbol at the start of s. At each length the raw prefix is
  // tried first, then the prefix with its last code point canonically
  // decomposed (NFC may have fused a mark into the last letter of a
  // multi-letter base).
  Match MatchBase(std::u32string_view s) const {
    for (size_t n = std::min(inv_.max_base_length(), s.size()); n > 0; --n) {
      if (inv_.FindBase(s.substr(0, n)) != nullptr) {
        return {n, std::u32string(s.substr(0, n)), {}};
      }
      if (n < 2) continue;
      const std::u32string d = CanonicalDecomposition(s[n - 1]);
      if (d.size() < 2) continue;
      std::u32string symbol(s.substr(0, n - 1));
      symbol += d[0];
      if (inv_.FindBase(symbol) != nullptr) return {n, symbol, d.substr(1)};
    }
    return {};
  }

  void StartPhone(std::u32string_view symbol, size_t begin, size_t end) {
    const Inventory::Entry* entry = inv_.FindBase(symbol);
    SegmentedPhone sp{Phone{entry->symbol, {}, {}}, begin, end};
    sp.phone.features = DeriveFeatures(*entry, {});
    out_.push_back(std::move(sp));
    entry_ = entry;
    open_ = true;
  }

  void Attach(char32_t mark, DiacriticKind kind, size_t begin, size_t end) {
    if (!open_) throw OrphanDiacritic(mark, ByteOffset(begin));
    Phone& p = out_.back().phone;
    p.diacritics.push_back({mark, kind});
    if (p.Has(DiacriticKind::kAspiration) && p.Has(DiacriticKind::kBreathy)) {
      throw ConflictingPhonation(ByteOffset(begin));
    }
    p.features = DeriveFeatures(*entry_, p.diacritics);
    out_.back().end = end;
  }

  // A precomposed character (say U+1EBD) stands for a base plus combining
  // marks; read it as its canonical decomposition.
  void ConsumeDecomposed(char32_t c, size_t index) {
    const std::u32string d = CanonicalDecomposition(c);
    if (d.empty()) throw UnknownSymbol(c, ByteOffset(index));
    std::u32string_view rest(d);
    for (size_t n = std::min(inv_.max_base_length(), rest.size()); n > 0; --n) {
      if (inv_.FindBase(rest.substr(0, n)) != nullptr) {
        StartPhone(rest.substr(0, n), index, index + 1);
        rest.remove_prefix(n);
        break;
      }
    }
    for (char32_t mark : rest) {
      const auto kind = inv_.FindDiacritic(mark);
      if (!kind) throw UnknownSymbol(c, ByteOffset(index));
      Attach(mark, *kind, index, index + 1);
    }
  }

  const Inventory& inv_;
  std::u32string_view text_;
  std::span<const size_t> offsets_;
  std::vector<SegmentedPhone> out_;
  const Inventory::Entry* entry_ = nullptr;
  bool open_ = false;
};

}  // namespace

bool Phone::Has(DiacriticKind kind) const {
  return std::any_of(diacritics.begin(), diacritics.end(),
                     [kind](const Diacritic& d) { return d.kind == kind; });
}

std::string Phone::Symbol() const {
  std::string s = base;
  for (const auto& d : diacritics) s += ToUtf8(d.mark);
  return Nfc(s);
}

PhoneFeatures DeriveFeatures(const Inventory::Entry& entry,
                             std::span<const Diacritic> diacritics) {
  PhoneFeatures f{entry.place, entry.manner, {entry.voiced, false}};
  for (const auto& d : diacritics) {
    switch (d.kind) {
      case DiacriticKind::kVoiceless:
        f.phonation.voiced = false;
        break;
      case DiacriticKind::kAspiration:
      case DiacriticKind::kBreathy:
        f.phonation.spread_glottis = true;
        break;
      case DiacriticKind::kDental:
        if (f.place == Place::kAlveolar) f.place = Place::kDental;
        break;
      default:
        break;
    }
  }
  return f;
}

std::vector<SegmentedPhone> SegmentCodePoints(const Inventory& inventory,
                                              std::u32string_view text,
                                              std::span<const size_t> offsets) {
  return Segmenter(inventory, text, offsets).Run();
}

std::vector<Phone> TokenizeIpa(const Inventory& inventory, std::string_view s) {
  const std::string normalized = Nfc(s);
  std::u32string text;
  std::vector<size_t> offsets;
  for (const auto& cp : DecodeUtf8(normalized)) {
    text.push_back(cp.value);
    offsets.push_back(cp.byte_offset);
  }
  std::vector<Phone> phones;
  for (auto& sp : SegmentCodePoints(inventory, text, offsets)) {
    phones.push_back(std::move(sp.phone));
  }
  return phones;
}

Phone ParsePhone(const Inventory& inventory, std::string_view s) {
  std::vector<Phone> phones = TokenizeIpa(inventory, s);
  if (phones.size() != 1) {
    throw FormatError("'" + std::string(s) + "' is not a single phone");
  }
  return std::move(phones.front());
}

std::string Serialize(std::span<const Phone> phones) {
  std::string s;
  for (const auto& p : phones) {
    s += p.base;
    for (const auto& d : p.diacritics) s += ToUtf8(d.mark);
  }
  return Nfc(s);
}

Phonation PhonationOf(const Phone& p) { return p.features.phonation; }

Phone WithPhonation(const Inventory& inventory, const Phone& p,
                    const Phonation& target) {
  const auto counterpart = inventory.VoicingCounterpart(p.base);
  if (!counterpart) throw NoVoicingCounterpart(p.base);
  const Inventory::Entry* entry = inventory.FindBase(p.base);

  Phone out;
  out.base = entry->voiced == target.voiced ? p.base : *counterpart;
  for (const auto& d : p.diacritics) {
    if (!IsPhonationKind(d.kind)) out.diacritics.push_back(d);
  }
  if (target.spread_glottis) {
    const Diacritic mark =
        target.voiced ? Diacritic{kBreathyMark, DiacriticKind::kBreathy}
                      : Diacritic{kAspirationMark, DiacriticKind::kAspiration};
    // Phonation marks go before length marks: tʰː, not tːʰ.
    const auto pos = std::find_if(
        out.diacritics.begin(), out.diacritics.end(),
        [](const Diacritic& d) { return d.kind == DiacriticKind::kLength; });
    out.diacritics.insert(pos, mark);
  }
  out.features = DeriveFeatures(*inventory.FindBase(out.base), out.diacritics);
  return out;
}

std::string NormalizeG(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    if (c == 'g') {
      out += "\xC9\xA1";  // U+0261
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace selaug
