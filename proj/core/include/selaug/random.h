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

#ifndef SELAUG_RANDOM_H_
#define SELAUG_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace selaug {

// Portable seeded generator: std::mt19937_64 (whose output sequence is fixed
// by the C++ standard) plus distribution code written here, since the
// standard distributions are implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n) by rejection; n must be > 0.
  uint64_t UniformBelow(uint64_t n) {
    const uint64_t limit = -n % n;  // 2^64 mod n
    for (;;) {
      const uint64_t x = engine_();
      if (x >= limit) return x % n;
    }
  }

  // Uniform integer in [lo, hi].
  int64_t UniformInt(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(
                    UniformBelow(static_cast<uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double UniformReal(double lo, double hi) {
    return lo + (hi - lo) * UniformUnit();
  }

  bool Bernoulli(double p) { return UniformUnit() < p; }

  // Fisher-Yates, walking from the back.
  template <typename T>
  void Shuffle(std::vector<T>* v) {
    for (size_t i = v->size(); i > 1; --i) {
      const size_t j = UniformBelow(i);
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used to derive independent sub-seeds.
constexpr uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sub-seed for stream `index` of a run seeded with `seed`.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return MixSeed(MixSeed(seed) ^ MixSeed(index + 1));
}

// FNV-1a, for deriving sub-seeds from names.
constexpr uint64_t HashName(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace selaug

#endif  // SELAUG_RANDOM_H_
