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

#include "selaug/jsonl.h"

#include <fstream>
#include <utility>

#include "selaug/error.h"

namespace selaug {

JsonLinesReader::JsonLinesReader(std::istream& in, std::string source_name)
    : in_(in), source_name_(std::move(source_name)) {}

bool JsonLinesReader::Next(nlohmann::json* value) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      *value = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      Fail(std::string("malformed JSON: ") + e.what());
    }
    return true;
  }
  if (in_.bad()) Fail("read error");
  return false;
}

void JsonLinesReader::Fail(const std::string& what) const {
  throw FormatError(source_name_, line_number_, what);
}

void WriteJsonLine(std::ostream& out, const nlohmann::json& value) {
  out << value.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict)
      << '\n';
}

const nlohmann::json& RequireField(const nlohmann::json& obj,
                                   std::string_view key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError("missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string RequireString(const nlohmann::json& obj, std::string_view key) {
  const auto& v = RequireField(obj, key);
  if (!v.is_string()) {
    throw FormatError("field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

double RequireNumber(const nlohmann::json& obj, std::string_view key) {
  const auto& v = RequireField(obj, key);
  if (!v.is_number()) {
    throw FormatError("field '" + std::string(key) + "' must be a number");
  }
  return v.get<double>();
}

int64_t RequireInt(const nlohmann::json& obj, std::string_view key) {
  const auto& v = RequireField(obj, key);
  if (!v.is_number_integer()) {
    throw FormatError("field '" + std::string(key) + "' must be an integer");
  }
  return v.get<int64_t>();
}

bool RequireBool(const nlohmann::json& obj, std::string_view key) {
  const auto& v = RequireField(obj, key);
  if (!v.is_boolean()) {
    throw FormatError("field '" + std::string(key) + "' must be a boolean");
  }
  return v.get<bool>();
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": malformed JSON: " + e.what());
  }
}

}  // namespace selaug
