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

// Data quality diagnostics: lexical similarity between passages, a cohesion
// based naturality proxy and counts of SAM expressions in external corpora.

#ifndef SAMGEN_QUALITY_H_
#define SAMGEN_QUALITY_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "samgen/lexicon.h"
#include "samgen/realiser.h"

namespace samgen {

// |A & B| / |A | B| over lowercased word sets; 0 when both are empty.
double Jaccard(std::string_view a, std::string_view b);

struct SimilarityResult {
  double mean = 0;
  std::size_t pairs = 0;
};

// Mean Jaccard similarity over sample_pairs distinct unordered pairs, or
// over all pairs when there are fewer.
SimilarityResult LexicalSimilarity(std::span<const std::string> paragraphs,
                                   std::size_t sample_pairs, std::uint64_t seed);

struct NaturalityResult {
  double score = 0;               // mean of the two overlap indices
  double lemma_overlap = 0;       // adjacent-sentence content lemma overlap
  double argument_overlap = 0;    // adjacent-sentence noun/pronoun overlap
  double pronoun_antecedent = 0;  // pronouns preceded by a named antecedent
  std::size_t paragraphs = 0;
};

// Crude lemma: lowercase, edge punctuation stripped, common inflectional
// suffixes removed. Empty for stop words.
std::string ContentLemma(std::string_view token);

// Throws Error(kTooShort) for a paragraph with fewer than two sentences.
NaturalityResult Naturality(std::span<const std::string> paragraphs);

struct ScanPassage {
  std::string text;
  std::vector<Span> answers;
};

struct ScanResult {
  std::size_t passages = 0;
  std::size_t with_expression = 0;
  std::size_t near_answer = 0;
  double fraction = 0;
  double near_fraction = 0;
};

// Case-insensitive token-sequence search of every lexicon expression. An
// expression is near an answer when the character gap between the two spans
// is at most window.
ScanResult ScanCorpus(std::span<const ScanPassage> passages, std::span<const SamEntry> lexicon,
                      std::size_t window);

// Paragraph contexts and answer spans of a SQuAD-style JSON file.
std::vector<ScanPassage> LoadSquadCorpus(const std::filesystem::path &path);

nlohmann::ordered_json QualityJson(const SimilarityResult &similarity,
                                   const NaturalityResult &naturality);
nlohmann::ordered_json ScanJson(const ScanResult &scan, std::size_t window);

}  // namespace samgen

#endif  // SAMGEN_QUALITY_H_
