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

#ifndef SELAUG_UNICODE_H_
#define SELAUG_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace selaug {

// One decoded code point and the byte offset where it starts.
struct CodePoint {
  char32_t value;
  size_t byte_offset;
};

// Decodes UTF-8. Throws InvalidUtf8 on malformed input.
std::vector<CodePoint> DecodeUtf8(std::string_view s);
std::u32string ToU32(std::string_view s);
std::string ToUtf8(std::u32string_view s);
std::string ToUtf8(char32_t cp);

// Unicode canonical composition (NFC).
std::string Nfc(std::string_view s);
bool IsNfc(std::string_view s);

// Full canonical decomposition of a single code point; empty when the code
// point has none.
std::u32string CanonicalDecomposition(char32_t cp);

bool IsWhitespace(char32_t cp);
char32_t ToLower(char32_t cp);

}  // namespace selaug

#endif  // SELAUG_UNICODE_H_
