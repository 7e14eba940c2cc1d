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

#include "selaug/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

#include "selaug/error.h"

namespace selaug {

namespace {

const icu::Normalizer2& NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  return *n;
}

const icu::Normalizer2& NfdInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  return *n;
}

}  // namespace

std::vector<CodePoint> DecodeUtf8(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) throw InvalidUtf8(static_cast<size_t>(start));
    out.push_back({static_cast<char32_t>(c), static_cast<size_t>(start)});
  }
  return out;
}

std::u32string ToU32(std::string_view s) {
  std::u32string out;
  for (const auto& cp : DecodeUtf8(s)) out.push_back(cp.value);
  return out;
}

std::string ToUtf8(char32_t cp) {
  std::string out;
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) throw InvalidUtf8(0);
  out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  return out;
}

std::string ToUtf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) out += ToUtf8(cp);
  return out;
}

std::string Nfc(std::string_view s) {
  // Validate first so malformed input is reported rather than replaced.
  DecodeUtf8(s);
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = NfcInstance().normalize(in, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsNfc(std::string_view s) { return Nfc(s) == s; }

std::u32string CanonicalDecomposition(char32_t cp) {
  icu::UnicodeString decomposition;
  if (!NfdInstance().getDecomposition(static_cast<UChar32>(cp),
                                      decomposition)) {
    return {};
  }
  std::string utf8;
  decomposition.toUTF8String(utf8);
  return ToU32(utf8);
}

bool IsWhitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

char32_t ToLower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

}  // namespace selaug
