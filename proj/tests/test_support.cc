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

#include "test_support.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "selaug/jsonl.h"
#include "selaug/unicode.h"

namespace selaug::testing {

std::string FixturePath(const std::string& name) {
  return std::string(SELAUG_TEST_FIXTURES) + "/" + name;
}

std::string CliPath() { return SELAUG_CLI_PATH; }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

std::string MakeTempDir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("selaug_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

int Run(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::vector<EvalInstance> LoadEvalInstances(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  JsonLinesReader reader(in, path);
  std::vector<EvalInstance> out;
  nlohmann::json j;
  while (reader.Next(&j)) out.push_back(EvalInstanceFromJson(j));
  return out;
}

std::vector<CollapsedRun> NaiveCollapse(const std::vector<std::string>& labels,
                                        const std::string& blank) {
  std::vector<CollapsedRun> merged;
  for (size_t f = 0; f < labels.size(); ++f) {
    const auto frame = static_cast<int64_t>(f);
    if (!merged.empty() && merged.back().token == labels[f]) {
      merged.back().end_frame = frame;
    } else {
      merged.push_back({labels[f], frame, frame});
    }
  }
  std::vector<CollapsedRun> out;
  for (const auto& r : merged) {
    if (r.token != blank) out.push_back(r);
  }
  return out;
}

std::string RandomIpaString(SeededRng& rng, const Inventory& inventory,
                            size_t max_phones) {
  const auto& entries = inventory.entries();
  std::vector<char32_t> marks;
  for (const auto& [mark, kind] : inventory.diacritics()) marks.push_back(mark);
  std::sort(marks.begin(), marks.end());

  std::string s;
  const size_t n = 1 + rng.UniformBelow(max_phones);
  for (size_t i = 0; i < n; ++i) {
    s += entries[rng.UniformBelow(entries.size())].symbol;
    const size_t k = rng.UniformBelow(3);
    bool phonation = false;
    for (size_t d = 0; d < k; ++d) {
      const char32_t m = marks[rng.UniformBelow(marks.size())];
      if (m == kAspirationMark || m == kBreathyMark) {
        if (phonation) continue;
        phonation = true;
      }
      s += ToUtf8(m);
    }
  }
  return Nfc(s);
}

}  // namespace selaug::testing
