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

#ifndef SELAUG_JSONL_H_
#define SELAUG_JSONL_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace selaug {

// Reads one JSON value per line. Blank lines are skipped; a malformed line
// raises FormatError carrying the source name and 1-based line number.
class JsonLinesReader {
 public:
  JsonLinesReader(std::istream& in, std::string source_name);

  // Returns false at end of input.
  bool Next(nlohmann::json* value);
  size_t line_number() const { return line_number_; }
  const std::string& source_name() const { return source_name_; }

  // Wraps an error raised while interpreting the current line.
  [[noreturn]] void Fail(const std::string& what) const;

 private:
  std::istream& in_;
  std::string source_name_;
  size_t line_number_ = 0;
};

void WriteJsonLine(std::ostream& out, const nlohmann::json& value);

// Field accessors that raise FormatError with the field name on a type or
// presence mismatch.
const nlohmann::json& RequireField(const nlohmann::json& obj,
                                   std::string_view key);
std::string RequireString(const nlohmann::json& obj, std::string_view key);
double RequireNumber(const nlohmann::json& obj, std::string_view key);
int64_t RequireInt(const nlohmann::json& obj, std::string_view key);
bool RequireBool(const nlohmann::json& obj, std::string_view key);

nlohmann::json ReadJsonFile(const std::string& path);

}  // namespace selaug

#endif  // SELAUG_JSONL_H_
