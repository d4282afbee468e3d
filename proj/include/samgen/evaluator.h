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

// Scoring of prediction files against aligned challenge sets.

#ifndef SAMGEN_EVALUATOR_H_
#define SAMGEN_EVALUATOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "samgen/generator.h"

namespace samgen {

// Instance id -> predicted answer text.
using PredictionSet = std::map<std::string, std::string>;

PredictionSet ParsePredictions(std::string_view json_text);
PredictionSet LoadPredictions(const std::filesystem::path &path);
std::string PredictionsJson(const PredictionSet &predictions);

struct EvalConfig {
  int k = 5;
  double alpha = 0.05;
  bool char_level = false;  // plain substring instead of token sequence

  void Validate() const;
};

// Relaxed exact match: 1 iff the prediction has at most k whitespace tokens
// and contains the gold answer (case-insensitive, as a contiguous token
// sequence with edge punctuation stripped, or as a plain substring when
// char_level is set).
int RemK(std::string_view prediction, std::string_view gold, int k, bool char_level = false);

// Standard normal quantile.
double NormalQuantile(double probability);

// Half-width z(1 - alpha/2) * sqrt(p (1 - p) / n) of the normal
// approximation interval.
double CiHalfWidth(double p, std::size_t n, double alpha);

struct DiceCount {
  std::size_t consistent = 0;  // |B+ & I+ & C+|
  std::size_t basis = 0;       // |B+ & C+|

  // Throws Error(kEmptyBasis) when basis is 0.
  double Ratio() const;
};

// Membership sets are sorted triple indices.
DiceCount CountDice(std::span<const std::size_t> b_plus, std::span<const std::size_t> i_plus,
                    std::span<const std::size_t> c_plus);

struct SubResult {
  std::size_t triples = 0;
  DiceCount count;
  std::optional<double> dice;  // absent for an empty basis
  double ci = 0;
};

struct ErrorAnalysis {
  std::size_t cases = 0;   // |(B+ & C+) \ I+|
  std::size_t copies = 0;  // of which the intervention prediction is A
  double fraction = 0;
  double ci = 0;
};

struct EvalResult {
  std::size_t triples = 0;
  std::vector<std::size_t> b_plus;
  std::vector<std::size_t> i_plus;
  std::vector<std::size_t> c_plus;
  DiceCount count;
  std::optional<double> dice;
  double ci = 0;
  double acc_b = 0;
  double acc_i = 0;
  double acc_c = 0;
  std::size_t missing = 0;  // instance ids without a prediction
  std::map<std::string, SubResult> by_category;
  std::map<int, SubResult> by_n_sam;
  std::optional<ErrorAnalysis> error_analysis;

  // Throws Error(kEmptyBasis) when no triple is solved on both baseline and
  // control.
  double Dice() const;
};

EvalResult Evaluate(const ChallengeSet &set, const PredictionSet &predictions,
                    const EvalConfig &config);

// Fraction of (B+ & C+) \ I+ where the intervention prediction matches the
// baseline answer. Throws Error(kEmptySet) if there is no such triple.
ErrorAnalysis AnalyseErrors(const ChallengeSet &set, const PredictionSet &predictions,
                            const EvalConfig &config);

struct FisherResult {
  double p = 1.0;
  bool degenerate = false;  // a zero margin; p is 1 by convention
};

// Two-sided exact test on [[a, b], [c, d]]: the total probability of all
// tables with the same margins that are no more likely than the observed one.
FisherResult FisherExact(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

// Consistent vs. inconsistent triples within each result's basis.
FisherResult FisherCompare(const EvalResult &a, const EvalResult &b);

// Pooled DICE over several sets.
SubResult MicroAverage(std::span<const EvalResult> results, double alpha);

// Candidate answers of a passage: names of the roster and numbers with their
// unit word, deduplicated, in order of first occurrence.
std::vector<std::string> AnswerCandidates(std::string_view passage,
                                          std::span<const std::string> roster);

enum class ExpectedAnswer { kAny, kPlayer, kMinute, kDistance };
ExpectedAnswer ExpectedAnswerType(std::string_view question);

struct BaselinePredictions {
  PredictionSet predictions;
  std::size_t fallbacks = 0;  // informed pools that were empty
};

BaselinePredictions RandomBaseline(const ChallengeSet &set, std::uint64_t seed);
BaselinePredictions InformedBaseline(const ChallengeSet &set, std::uint64_t seed);

nlohmann::ordered_json EvalJson(const EvalResult &result);
std::string EvalTable(const EvalResult &result);

}  // namespace samgen

#endif  // SAMGEN_EVALUATOR_H_
