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

// Human-readable rendering of one aligned triple.

#ifndef SAMGEN_INSPECT_H_
#define SAMGEN_INSPECT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "samgen/generator.h"

namespace samgen {

// Whitespace-token difference after removing the common prefix and suffix.
struct TokenDiff {
  std::size_t prefix = 0;
  std::vector<std::string> removed;
  std::vector<std::string> added;
};

TokenDiff DiffTokens(std::string_view before, std::string_view after);

// Question, answers and the three passages; changed words of the
// intervention are wrapped in [+ +], removed control sentences in [- -].
std::string InspectTriple(const TripleRecord &record);

const TripleRecord &FindTriple(const ChallengeSet &set, std::size_t serial);

}  // namespace samgen

#endif  // SAMGEN_INSPECT_H_
