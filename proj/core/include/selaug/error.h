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

#ifndef SELAUG_ERROR_H_
#define SELAUG_ERROR_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace selaug {

// Base class for every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry structured context.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file content (bad JSON, missing field, wrong type).
class FormatError : public Error {
 public:
  FormatError(const std::string& source, size_t line, const std::string& what);
  explicit FormatError(const std::string& what) : Error(what) {}

  const std::string& source() const { return source_; }
  size_t line() const { return line_; }

 private:
  std::string source_;
  size_t line_ = 0;
};

class InvalidUtf8 : public Error {
 public:
  explicit InvalidUtf8(size_t byte_offset);
  size_t byte_offset() const { return byte_offset_; }

 private:
  size_t byte_offset_;
};

class UnknownSymbol : public Error {
 public:
  UnknownSymbol(char32_t code_point, size_t byte_offset);
  char32_t code_point() const { return code_point_; }
  size_t byte_offset() const { return byte_offset_; }

 private:
  char32_t code_point_;
  size_t byte_offset_;
};

class OrphanDiacritic : public Error {
 public:
  OrphanDiacritic(char32_t code_point, size_t byte_offset);
  char32_t code_point() const { return code_point_; }
  size_t byte_offset() const { return byte_offset_; }

 private:
  char32_t code_point_;
  size_t byte_offset_;
};

// A phone carrying both the aspiration and the breathy-voice diacritic.
class ConflictingPhonation : public Error {
 public:
  explicit ConflictingPhonation(size_t byte_offset);
};

class NoVoicingCounterpart : public Error {
 public:
  explicit NoVoicingCounterpart(const std::string& base);
  const std::string& base() const { return base_; }

 private:
  std::string base_;
};

class InvalidTrack : public Error {
 public:
  using Error::Error;
};

class UtteranceMismatch : public Error {
 public:
  UtteranceMismatch(const std::string& rm_id, const std::string& hm_id);
};

class MissingCounterpart : public Error {
 public:
  explicit MissingCounterpart(const std::string& utt_id);
  const std::string& utt_id() const { return utt_id_; }

 private:
  std::string utt_id_;
};

class InsufficientSegments : public Error {
 public:
  InsufficientSegments(size_t have, size_t need);
};

class InsufficientInstances : public Error {
 public:
  InsufficientInstances(const std::string& phoneme, size_t have, size_t need);
  const std::string& phoneme() const { return phoneme_; }
  size_t have() const { return have_; }
  size_t need() const { return need_; }

 private:
  std::string phoneme_;
  size_t have_;
  size_t need_;
};

class RemoveInUse : public Error {
 public:
  explicit RemoveInUse(const std::string& token);
};

class EmptyDenominator : public Error {
 public:
  explicit EmptyDenominator(const std::string& metric);
};

class ZeroBaseline : public Error {
 public:
  ZeroBaseline() : Error("relative change undefined for a zero baseline") {}
};

// Formats a code point as U+XXXX.
std::string CodePointName(char32_t cp);

}  // namespace selaug

#endif  // SELAUG_ERROR_H_
