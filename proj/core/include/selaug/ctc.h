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

#ifndef SELAUG_CTC_H_
#define SELAUG_CTC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/inventory.h"
#include "selaug/ipa.h"

namespace selaug {

// Per-frame best-path labels of one utterance.
struct FramePath {
  std::string utt_id;
  double frame_ms = 0.0;
  std::string blank;
  std::vector<std::string> labels;
};

struct CollapsedRun {
  std::string token;
  int64_t start_frame;
  int64_t end_frame;

  friend bool operator==(const CollapsedRun&, const CollapsedRun&) = default;
};

// Merges runs of identical labels and drops blank runs. Each surviving run
// keeps the first and last frame of its own run.
std::vector<CollapsedRun> GreedyCollapse(std::span<const std::string> labels,
                                         std::string_view blank);

enum class ModelTag { kRM, kHM, kBM, kTM, kOther };

std::string_view ToString(ModelTag tag);
ModelTag ParseModelTag(std::string_view s);

struct TimedPhone {
  Phone phone;
  int64_t start_frame = 0;
  int64_t end_frame = 0;

  int64_t length() const { return end_frame - start_frame + 1; }
  friend bool operator==(const TimedPhone&, const TimedPhone&) = default;
};

struct PhoneTrack {
  std::string utt_id;
  ModelTag model = ModelTag::kOther;
  double frame_ms = 0.0;
  std::vector<TimedPhone> phones;

  friend bool operator==(const PhoneTrack&, const PhoneTrack&) = default;
};

// Throws InvalidTrack if spans are negative or inverted, start frames
// decrease, utt_id is empty or frame_ms is not positive.
void ValidateTrack(const PhoneTrack& track);

// Collapses the path and re-segments the surviving characters into phones.
// A phone's span is the union of the spans of the runs it was built from.
// Tokens are NFC-normalized; whitespace tokens are dropped.
PhoneTrack DecodeTrack(const FramePath& path, const Inventory& inventory,
                       ModelTag model = ModelTag::kRM);

// JSON Lines records. FramePathFromJson falls back to `default_blank` and
// `default_frame_ms` when the record omits them (0 / empty means "none").
FramePath FramePathFromJson(const nlohmann::json& j,
                            std::string_view default_blank = {},
                            double default_frame_ms = 0.0);
nlohmann::json FramePathToJson(const FramePath& path);
PhoneTrack PhoneTrackFromJson(const nlohmann::json& j,
                              const Inventory& inventory);
nlohmann::json PhoneTrackToJson(const PhoneTrack& track);

}  // namespace selaug

#endif  // SELAUG_CTC_H_
