// Copyright 2026 The samgen Authors.
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

#ifndef SAMGEN_ERROR_H_
#define SAMGEN_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace samgen {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kNoQualifyingEvent,
  kUnsatisfiablePlan,
  kExhaustedRetries,
  kCapacityExceeded,
  kMissingExpansion,
  kVerbFormUnavailable,
  kDepthExceeded,
  kAllSentencesRemoved,
  kEmptyBasis,
  kEmptySet,
  kTooShort,
  kEmptyPassage,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// branch on code() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when more unique (event-kind sequence, question type) combinations
// are requested than exist. maximum() is the largest achievable count.
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::uint64_t requested, std::uint64_t maximum);

  std::uint64_t requested() const { return requested_; }
  std::uint64_t maximum() const { return maximum_; }

 private:
  std::uint64_t requested_;
  std::uint64_t maximum_;
};

}  // namespace samgen

#endif  // SAMGEN_ERROR_H_
