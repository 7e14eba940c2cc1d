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

#include "selaug/ctc.h"

#include "selaug/error.h"
#include "selaug/jsonl.h"
#include "selaug/unicode.h"

namespace selaug {

std::vector<CollapsedRun> GreedyCollapse(std::span<const std::string> labels,
                                         std::string_view blank) {
  std::vector<CollapsedRun> runs;
  size_t run_start = 0;
  for (size_t t = 1; t <= labels.size(); ++t) {
    if (t < labels.size() && labels[t] == labels[run_start]) continue;
    if (labels[run_start] != blank) {
      runs.push_back({labels[run_start], static_cast<int64_t>(run_start),
                      static_cast<int64_t>(t - 1)});
    }
    run_start = t;
  }
  return runs;
}

std::string_view ToString(ModelTag tag) {
  switch (tag) {
    case ModelTag::kRM:
      return "RM";
    case ModelTag::kHM:
      return "HM";
    case ModelTag::kBM:
      return "BM";
    case ModelTag::kTM:
      return "TM";
    case ModelTag::kOther:
      break;
  }
  return "OTHER";
}

ModelTag ParseModelTag(std::string_view s) {
  if (s == "RM") return ModelTag::kRM;
  if (s == "HM") return ModelTag::kHM;
  if (s == "BM") return ModelTag::kBM;
  if (s == "TM") return ModelTag::kTM;
  if (s == "OTHER") return ModelTag::kOther;
  throw FormatError("unknown model tag '" + std::string(s) + "'");
}

void ValidateTrack(const PhoneTrack& track) {
  if (track.utt_id.empty()) throw InvalidTrack("track has an empty utt_id");
  if (!(track.frame_ms > 0.0)) {
    throw InvalidTrack(track.utt_id + ": frame_ms must be positive");
  }
  int64_t prev_start = 0;
  for (size_t i = 0; i < track.phones.size(); ++i) {
    const TimedPhone& p = track.phones[i];
    if (p.start_frame < 0 || p.end_frame < p.start_frame) {
      throw InvalidTrack(track.utt_id + ": phone " + std::to_string(i) +
                         " has an invalid span");
    }
    if (p.start_frame < prev_start) {
      throw InvalidTrack(track.utt_id + ": start frames decrease at phone " +
                         std::to_string(i));
    }
    prev_start = p.start_frame;
  }
}

PhoneTrack DecodeTrack(const FramePath& path, const Inventory& inventory,
                       ModelTag model) {
  const std::vector<CollapsedRun> runs = GreedyCollapse(path.labels, path.blank);

  // Concatenated text plus, per code point, the run it came from.
  std::u32string text;
  std::vector<size_t> run_of;
  std::vector<size_t> offsets;
  size_t byte = 0;
  for (size_t r = 0; r < runs.size(); ++r) {
    for (const auto& cp : DecodeUtf8(runs[r].token)) {
      text.push_back(cp.value);
      run_of.push_back(r);
      offsets.push_back(byte + cp.byte_offset);
    }
    byte += runs[r].token.size();
  }

  PhoneTrack track;
  track.utt_id = path.utt_id;
  track.model = model;
  track.frame_ms = path.frame_ms;
  for (auto& sp : SegmentCodePoints(inventory, text, offsets)) {
    TimedPhone tp;
    tp.start_frame = runs[run_of[sp.begin]].start_frame;
    tp.end_frame = runs[run_of[sp.end - 1]].end_frame;
    tp.phone = std::move(sp.phone);
    track.phones.push_back(std::move(tp));
  }
  return track;
}

FramePath FramePathFromJson(const nlohmann::json& j,
                            std::string_view default_blank,
                            double default_frame_ms) {
  FramePath path;
  path.utt_id = RequireString(j, "utt_id");
  if (path.utt_id.empty()) throw FormatError("empty utt_id");
  path.frame_ms =
      j.contains("frame_ms") ? RequireNumber(j, "frame_ms") : default_frame_ms;
  if (!(path.frame_ms > 0.0)) {
    throw FormatError("frame_ms missing or not positive");
  }
  path.blank = j.contains("blank") ? Nfc(RequireString(j, "blank"))
                                   : Nfc(default_blank);
  if (path.blank.empty()) throw FormatError("blank token missing");
  const auto& labels = RequireField(j, "labels");
  if (!labels.is_array()) throw FormatError("'labels' must be an array");
  path.labels.reserve(labels.size());
  for (const auto& l : labels) {
    if (!l.is_string()) throw FormatError("labels must be strings");
    path.labels.push_back(Nfc(l.get<std::string>()));
  }
  return path;
}

nlohmann::json FramePathToJson(const FramePath& path) {
  return {{"utt_id", path.utt_id},
          {"frame_ms", path.frame_ms},
          {"blank", path.blank},
          {"labels", path.labels}};
}

PhoneTrack PhoneTrackFromJson(const nlohmann::json& j,
                              const Inventory& inventory) {
  PhoneTrack track;
  track.utt_id = RequireString(j, "utt_id");
  track.model = ParseModelTag(RequireString(j, "model"));
  track.frame_ms = RequireNumber(j, "frame_ms");
  const auto& phones = RequireField(j, "phones");
  if (!phones.is_array()) throw FormatError("'phones' must be an array");
  for (const auto& p : phones) {
    TimedPhone tp;
    tp.phone = ParsePhone(inventory, RequireString(p, "symbol"));
    tp.start_frame = RequireInt(p, "start");
    tp.end_frame = RequireInt(p, "end");
    track.phones.push_back(std::move(tp));
  }
  try {
    ValidateTrack(track);
  } catch (const InvalidTrack& e) {
    throw FormatError(e.what());
  }
  return track;
}

nlohmann::json PhoneTrackToJson(const PhoneTrack& track) {
  nlohmann::json phones = nlohmann::json::array();
  for (const auto& p : track.phones) {
    phones.push_back({{"symbol", p.phone.Symbol()},
                      {"start", p.start_frame},
                      {"end", p.end_frame}});
  }
  return {{"utt_id", track.utt_id},
          {"model", std::string(ToString(track.model))},
          {"frame_ms", track.frame_ms},
          {"phones", std::move(phones)}};
}

}  // namespace selaug
