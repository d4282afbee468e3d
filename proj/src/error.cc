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

#include "samgen/error.h"

namespace samgen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNoQualifyingEvent: return "NoQualifyingEvent";
    case ErrorCode::kUnsatisfiablePlan: return "UnsatisfiablePlan";
    case ErrorCode::kExhaustedRetries: return "ExhaustedRetries";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kMissingExpansion: return "MissingExpansion";
    case ErrorCode::kVerbFormUnavailable: return "VerbFormUnavailable";
    case ErrorCode::kDepthExceeded: return "DepthExceeded";
    case ErrorCode::kAllSentencesRemoved: return "AllSentencesRemoved";
    case ErrorCode::kEmptyBasis: return "EmptyBasis";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kEmptyPassage: return "EmptyPassage";
  }
  return "Unknown";
}

CapacityExceeded::CapacityExceeded(std::uint64_t requested,
                                   std::uint64_t maximum)
    : Error(ErrorCode::kCapacityExceeded,
            "requested " + std::to_string(requested) +
                " unique report/question combinations but at most " +
                std::to_string(maximum) + " exist"),
      requested_(requested),
      maximum_(maximum) {}

}  // namespace samgen
