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

// End-to-end challenge set generation: content planning, event generation,
// realisation, modification, serialization and loading of generated sets.

#ifndef SAMGEN_GENERATOR_H_
#define SAMGEN_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "samgen/grammar.h"
#include "samgen/model.h"
#include "samgen/planner.h"
#include "samgen/resources.h"
#include "samgen/sam.h"

namespace samgen {

inline constexpr std::size_t kRosterSize = 22;
inline constexpr const char *kChallengeFile = "challenge.json";
inline constexpr const char *kMetadataFile = "metadata.jsonl";
inline constexpr const char *kSetVersion = "sam-1.0";

struct GenerationConfig {
  std::uint64_t seed = 0;
  std::size_t size = 1;  // aligned triples
  int events = 6;
  int max_sam = kMaxSamPerInstance;
  SplitSelector split = SplitSelector::kFull;
  unsigned jobs = 0;  // 0: hardware concurrency

  // Throws Error(kInvalidArgument).
  void Validate() const;
};

// One aligned triple with everything needed to re-derive its answers.
struct TripleRecord {
  std::size_t serial = 0;
  AlignedTriple triple;
  QuestionSpec question;
  std::vector<Event> events;
  Roster roster;
  std::vector<std::string> templates;  // seed template per baseline sentence
};

struct ChallengeSet {
  std::vector<TripleRecord> triples;
};

// Draws n players with pairwise distinct given and family names.
Roster SampleRoster(const NameLexicon &names, std::size_t n, Rng &rng);

// Sequential planning stage: question types are drawn uniformly among those
// with unused capacity, then (kind sequence, question type) pairs are made
// unique. Throws CapacityExceeded if size exceeds the total capacity.
std::vector<ContentPlan> PlanSet(const GenerationConfig &config);

// Builds the triple for one plan from its own random stream.
TripleRecord BuildTriple(const ContentPlan &plan, std::size_t serial,
                         const GenerationConfig &config, const Resources &resources);

// The whole set in memory; the result does not depend on config.jobs.
ChallengeSet GenerateSet(const GenerationConfig &config, const Resources &resources);

nlohmann::ordered_json ChallengeJson(const ChallengeSet &set);
nlohmann::ordered_json MetadataJson(const TripleRecord &record);
std::string MetadataJsonl(const ChallengeSet &set);

// Writes challenge.json and metadata.jsonl. A non-empty directory is only
// overwritten with force; on failure nothing written by this call remains.
void WriteChallengeSet(const ChallengeSet &set, const std::filesystem::path &dir, bool force);

// Generates and writes in one step, removing partial output on failure.
ChallengeSet GenerateToDirectory(const GenerationConfig &config, const Resources &resources,
                                 const std::filesystem::path &dir, bool force);

// Accepts the set directory or the path of its challenge.json.
ChallengeSet LoadChallengeSet(const std::filesystem::path &path);

nlohmann::ordered_json QuestionJson(const QuestionForm &form, const Roster &roster);
QuestionForm ParseQuestionJson(const nlohmann::json &json, const Roster &roster);
std::optional<QuestionForm> ParseQuestionTypeKey(std::string_view key);

// Instances of each condition in set order.
std::vector<const MRCInstance *> Baselines(const ChallengeSet &set);
std::vector<const MRCInstance *> Interventions(const ChallengeSet &set);
std::vector<const MRCInstance *> Controls(const ChallengeSet &set);

struct PassageStats {
  std::size_t words = 0;
  std::size_t entities = 0;
  std::size_t numbers = 0;
};

// Whitespace words, distinct roster names present and digit-bearing tokens.
// Throws Error(kEmptyPassage) for a passage without words.
PassageStats CountPassage(std::string_view passage, std::span<const std::string> names);

struct CorpusStats {
  std::size_t passages = 0;
  double words = 0;
  double entities = 0;
  double numbers = 0;
};

// Averages over the baseline passages. Throws Error(kEmptySet) for an empty
// set.
CorpusStats CorpusStatistics(const ChallengeSet &set);

}  // namespace samgen

#endif  // SAMGEN_GENERATOR_H_
