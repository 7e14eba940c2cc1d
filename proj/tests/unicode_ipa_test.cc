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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "selaug/error.h"
#include "selaug/inventory.h"
#include "selaug/ipa.h"
#include "selaug/random.h"
#include "selaug/unicode.h"
#include "test_support.h"

namespace selaug {
namespace {

const Inventory& Inv() { return Inventory::Default(); }

std::vector<std::string> Symbols(const std::vector<Phone>& phones) {
  std::vector<std::string> out;
  for (const auto& p : phones) out.push_back(p.Symbol());
  return out;
}

TEST(Unicode, DecodeReportsByteOffsets) {
  const auto cps = DecodeUtf8("aʰb");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1].value, U'ʰ');
  EXPECT_EQ(cps[1].byte_offset, 1u);
  EXPECT_EQ(cps[2].byte_offset, 3u);
}

TEST(Unicode, RejectsInvalidUtf8) {
  EXPECT_THROW(DecodeUtf8("a\xff"), InvalidUtf8);
  EXPECT_THROW(DecodeUtf8("\xc3"), InvalidUtf8);
}

TEST(Unicode, NfcComposes) {
  const std::string composed = "\xe1\xba\xbd";  // U+1EBD
  const std::string decomposed = "e\xcc\x83";   // e U+0303
  EXPECT_EQ(Nfc(decomposed), composed);
  EXPECT_TRUE(IsNfc(composed));
  EXPECT_FALSE(IsNfc(decomposed));
  EXPECT_EQ(CanonicalDecomposition(U'\u1EBD'), std::u32string(U"e\u0303"));
}

TEST(Inventory, DefaultLoads) {
  const Inventory& inv = Inv();
  ASSERT_NE(inv.FindBase("t͡s"), nullptr);
  EXPECT_EQ(inv.FindBase("t͡s")->manner, Manner::kAffricate);
  EXPECT_EQ(inv.FindBase("g"), nullptr);
  EXPECT_EQ(inv.VoicingCounterpart("k"), "ɡ");
  EXPECT_EQ(inv.VoicingCounterpart("ɖ"), "ʈ");
  EXPECT_FALSE(inv.VoicingCounterpart("ʔ").has_value());
}

TEST(Inventory, RejectsLatinG) {
  nlohmann::json doc = {
      {"phones", {{{"symbol", "g"}, {"place", "velar"}, {"manner", "plosive"},
                   {"voiced", true}}}},
      {"voicing_pairs", nlohmann::json::array()},
      {"diacritics", {{"ʰ", "aspiration"}, {"ʱ", "breathy"}}}};
  EXPECT_THROW(Inventory::FromJson(doc), FormatError);
}

TEST(Tokenize, AspirationAttachesToBase) {
  const auto phones = TokenizeIpa(Inv(), "tʰa");
  EXPECT_EQ(Symbols(phones), (std::vector<std::string>{"tʰ", "a"}));
  EXPECT_TRUE(phones[0].Has(DiacriticKind::kAspiration));
  EXPECT_EQ(PhonationOf(phones[0]), kAspirated);
}

TEST(Tokenize, TieBarAffricateIsOnePhone) {
  EXPECT_EQ(Symbols(TokenizeIpa(Inv(), "t͡sa")),
            (std::vector<std::string>{"t͡s", "a"}));
  EXPECT_EQ(Symbols(TokenizeIpa(Inv(), "ts")),
            (std::vector<std::string>{"t", "s"}));
}

TEST(Tokenize, WhitespaceSeparatesAndIsDropped) {
  EXPECT_EQ(Symbols(TokenizeIpa(Inv(), " k  x u ")),
            (std::vector<std::string>{"k", "x", "u"}));
  EXPECT_TRUE(TokenizeIpa(Inv(), "").empty());
}

TEST(Tokenize, PrecomposedFallsBackToDecomposition) {
  const auto phones = TokenizeIpa(Inv(), "\xe1\xba\xbd");
  ASSERT_EQ(phones.size(), 1u);
  EXPECT_EQ(phones[0].base, "e");
  EXPECT_TRUE(phones[0].Has(DiacriticKind::kNasalization));
  EXPECT_EQ(phones[0].Symbol(), "\xe1\xba\xbd");
}

// NFC fuses x + U+0308 into U+1E8D inside the tie-bar affricate.
TEST(Tokenize, MarkFusedIntoMultiLetterBase) {
  const std::string s = Nfc("k\xcd\xa1x\xcc\x88");
  const auto phones = TokenizeIpa(Inv(), s);
  ASSERT_EQ(phones.size(), 1u);
  EXPECT_EQ(phones[0].base, "k\xcd\xa1x");
  ASSERT_EQ(phones[0].diacritics.size(), 1u);
  EXPECT_EQ(phones[0].diacritics[0].mark, U'\u0308');
  EXPECT_EQ(Serialize(phones), s);
  EXPECT_EQ(ParsePhone(Inv(), "\xc3\xa7").base, "\xc3\xa7");
}

TEST(Tokenize, OrphanDiacritics) {
  EXPECT_THROW(TokenizeIpa(Inv(), "ʰa"), OrphanDiacritic);
  EXPECT_THROW(TokenizeIpa(Inv(), "t ʰ"), OrphanDiacritic);
}

TEST(Tokenize, UnknownSymbolCarriesOffset) {
  try {
    TokenizeIpa(Inv(), "aʰ?");
    FAIL() << "expected UnknownSymbol";
  } catch (const UnknownSymbol& e) {
    EXPECT_EQ(e.byte_offset(), 3u);
  }
  EXPECT_THROW(TokenizeIpa(Inv(), "gut"), UnknownSymbol);
  EXPECT_NO_THROW(TokenizeIpa(Inv(), NormalizeG("gut")));
}

TEST(Tokenize, ConflictingPhonation) {
  EXPECT_THROW(TokenizeIpa(Inv(), "bʰʱ"), ConflictingPhonation);
}

TEST(Features, DentalAndVoicelessDiacritics) {
  EXPECT_EQ(ParsePhone(Inv(), "t̪").features.place, Place::kDental);
  EXPECT_EQ(ParsePhone(Inv(), "t").features.place, Place::kAlveolar);
  EXPECT_EQ(PhonationOf(ParsePhone(Inv(), "b̥")), kTenuis);
  EXPECT_EQ(PhonationOf(ParsePhone(Inv(), "bʱ")), kBreathyVoiced);
}

TEST(Features, NormalizeG) {
  EXPECT_EQ(NormalizeG("gag"), "ɡaɡ");
  EXPECT_EQ(NormalizeG("ɡ"), "ɡ");
}

// Every paired plosive under every phonation class.
TEST(WithPhonation, ExhaustivePlosivesTimesPhonations) {
  const Phonation targets[] = {kTenuis, kAspirated, kVoiced, kBreathyVoiced};
  int checked = 0;
  for (const auto& [voiceless, voiced] : Inv().voicing_pairs()) {
    for (const std::string& base : {voiceless, voiced}) {
      for (const std::string& extra : {std::string(), std::string("ʰ"),
                                       std::string("ʱ"), std::string("ː")}) {
        const Phone p = ParsePhone(Inv(), base + extra);
        for (const Phonation& target : targets) {
          const Phone out = WithPhonation(Inv(), p, target);
          EXPECT_EQ(PhonationOf(out), target) << p.Symbol();
          EXPECT_EQ(out.features.place, p.features.place) << p.Symbol();
          EXPECT_EQ(out.features.manner, p.features.manner) << p.Symbol();
          EXPECT_EQ(out.base, target.voiced ? voiced : voiceless);
          EXPECT_EQ(out.Has(DiacriticKind::kLength), p.Has(DiacriticKind::kLength));
          EXPECT_EQ(WithPhonation(Inv(), out, target), out);
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 6 * 2 * 4 * 4);
}

TEST(WithPhonation, Examples) {
  EXPECT_EQ(WithPhonation(Inv(), ParsePhone(Inv(), "k"), kAspirated).Symbol(), "kʰ");
  EXPECT_EQ(WithPhonation(Inv(), ParsePhone(Inv(), "t"), kVoiced).Symbol(), "d");
  EXPECT_EQ(WithPhonation(Inv(), ParsePhone(Inv(), "tː"), kAspirated).Symbol(), "tʰː");
  EXPECT_EQ(WithPhonation(Inv(), ParsePhone(Inv(), "dʱ"), kTenuis).Symbol(), "t");
  EXPECT_EQ(WithPhonation(Inv(), ParsePhone(Inv(), "b̥"), kVoiced).Symbol(), "b");
}

TEST(WithPhonation, UnpairedBaseThrows) {
  EXPECT_THROW(WithPhonation(Inv(), ParsePhone(Inv(), "ʔ"), kVoiced),
               NoVoicingCounterpart);
  EXPECT_THROW(WithPhonation(Inv(), ParsePhone(Inv(), "a"), kAspirated),
               NoVoicingCounterpart);
}

TEST(RoundTrip, RandomStrings) {
  SeededRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::string s = testing::RandomIpaString(rng, Inv(), 8);
    const auto phones = TokenizeIpa(Inv(), s);
    EXPECT_EQ(Serialize(phones), s);
  }
}

}  // namespace
}  // namespace selaug
