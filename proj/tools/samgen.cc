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

// samgen: generate and evaluate SAM challenge sets.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "samgen/error.h"
#include "samgen/evaluator.h"
#include "samgen/generator.h"
#include "samgen/inspect.h"
#include "samgen/quality.h"
#include "samgen/resources.h"

namespace {

using samgen::ErrorCode;

constexpr int kExitEmptyBasis = 2;

int Generate(std::uint64_t seed, std::size_t size, int events, int max_sam,
             const std::string &split, const std::string &out, bool force, unsigned jobs) {
  samgen::GenerationConfig config;
  config.seed = seed;
  config.size = size;
  config.events = events;
  config.max_sam = max_sam;
  config.jobs = jobs;
  auto selector = samgen::ParseSplitSelector(split);
  if (!selector) throw samgen::Error(ErrorCode::kInvalidArgument, "unknown split " + split);
  config.split = *selector;
  const samgen::Resources resources = samgen::LoadResources();
  samgen::ChallengeSet set = samgen::GenerateToDirectory(config, resources, out, force);
  std::cerr << "wrote " << set.triples.size() << " aligned triples ("
            << 3 * set.triples.size() << " instances) to " << out << "\n";
  return 0;
}

int Evaluate(const std::string &challenge, const std::string &predictions,
             const samgen::EvalConfig &config, bool by_category, bool by_n_sam, bool errors) {
  const samgen::ChallengeSet set = samgen::LoadChallengeSet(challenge);
  samgen::EvalResult result =
      samgen::Evaluate(set, samgen::LoadPredictions(predictions), config);
  samgen::EvalResult shown = result;
  if (!by_category) shown.by_category.clear();
  if (!by_n_sam) shown.by_n_sam.clear();
  if (!errors) shown.error_analysis.reset();
  std::cout << samgen::EvalTable(shown) << "\n" << samgen::EvalJson(shown).dump(2) << "\n";
  if (!result.dice) {
    std::cerr << "error: EmptyBasis: no triple is solved on both baseline and control\n";
    return kExitEmptyBasis;
  }
  return 0;
}

int Compare(const std::string &challenge, const std::string &a, const std::string &b,
            const samgen::EvalConfig &config) {
  const samgen::ChallengeSet set = samgen::LoadChallengeSet(challenge);
  const samgen::EvalResult ra = samgen::Evaluate(set, samgen::LoadPredictions(a), config);
  const samgen::EvalResult rb = samgen::Evaluate(set, samgen::LoadPredictions(b), config);
  const samgen::FisherResult fisher = samgen::FisherCompare(ra, rb);
  nlohmann::ordered_json out;
  out["a"] = samgen::EvalJson(ra);
  out["b"] = samgen::EvalJson(rb);
  out["table"] = {{ra.count.consistent, ra.count.basis - ra.count.consistent},
                  {rb.count.consistent, rb.count.basis - rb.count.consistent}};
  out["p_value"] = fisher.p;
  out["degenerate"] = fisher.degenerate;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int Baseline(const std::string &type, const std::string &challenge, std::uint64_t seed,
             const std::string &out) {
  const samgen::ChallengeSet set = samgen::LoadChallengeSet(challenge);
  samgen::BaselinePredictions predictions;
  if (type == "random") {
    predictions = samgen::RandomBaseline(set, seed);
  } else if (type == "informed") {
    predictions = samgen::InformedBaseline(set, seed);
  } else {
    throw samgen::Error(ErrorCode::kInvalidArgument, "unknown baseline " + type);
  }
  samgen::WriteFile(out, samgen::PredictionsJson(predictions.predictions));
  if (predictions.fallbacks > 0) {
    std::cerr << "warning: " << predictions.fallbacks
              << " questions had no candidate of the expected type; used the full pool\n";
  }
  return 0;
}

int Quality(const std::string &challenge, std::size_t pairs, std::uint64_t seed) {
  const samgen::ChallengeSet set = samgen::LoadChallengeSet(challenge);
  std::vector<std::string> paragraphs;
  for (const samgen::MRCInstance *inst : samgen::Baselines(set)) {
    paragraphs.push_back(inst->context);
  }
  const samgen::SimilarityResult similarity =
      samgen::LexicalSimilarity(paragraphs, pairs, seed);
  const samgen::NaturalityResult naturality = samgen::Naturality(paragraphs);
  std::cout << samgen::QualityJson(similarity, naturality).dump(2) << "\n";
  return 0;
}

int Scan(const std::string &corpus, std::size_t window, const std::string &category) {
  const samgen::Resources resources = samgen::LoadResources();
  std::vector<samgen::SamEntry> entries = resources.lexicon.entries();
  if (!category.empty()) {
    auto parsed = samgen::ParseSamCategory(category);
    if (!parsed) {
      throw samgen::Error(ErrorCode::kInvalidArgument, "unknown category " + category);
    }
    entries = resources.lexicon.ForCategory(*parsed);
  }
  const std::vector<samgen::ScanPassage> passages = samgen::LoadSquadCorpus(corpus);
  std::cout << samgen::ScanJson(samgen::ScanCorpus(passages, entries, window), window).dump(2)
            << "\n";
  return 0;
}

int Stats(const std::string &challenge) {
  const samgen::CorpusStats stats =
      samgen::CorpusStatistics(samgen::LoadChallengeSet(challenge));
  nlohmann::ordered_json out;
  out["passages"] = stats.passages;
  out["words"] = stats.words;
  out["entities"] = stats.entities;
  out["numbers"] = stats.numbers;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generate and evaluate SAM challenge sets for reading comprehension"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t size = 1;
  int events = 6;
  int max_sam = 3;
  std::string split = "full";
  std::string out;
  bool force = false;
  unsigned jobs = 0;
  auto *generate = app.add_subcommand("generate", "Generate an aligned challenge set");
  generate->add_option("--seed", seed, "Master seed");
  generate->add_option("--size", size, "Number of aligned triples")->check(CLI::PositiveNumber);
  generate->add_option("--events", events, "Events per report")->check(CLI::Range(3, 12));
  generate->add_option("--max-sam", max_sam, "Maximum modifications per triple")
      ->check(CLI::Range(1, 3));
  generate->add_option("--split", split, "Template split")
      ->check(CLI::IsMember({"train", "eval", "full"}));
  generate->add_option("--out", out, "Output directory")->required();
  generate->add_flag("--force", force, "Overwrite a non-empty output directory");
  generate->add_option("--jobs", jobs, "Worker threads (default: all cores)");

  std::string challenge;
  std::string predictions;
  samgen::EvalConfig eval;
  bool by_category = false;
  bool by_n_sam = false;
  bool errors = false;
  auto *evaluate = app.add_subcommand("evaluate", "Score a prediction file");
  evaluate->add_option("--challenge", challenge, "Challenge set directory")->required();
  evaluate->add_option("--predictions", predictions, "Prediction JSON")->required();
  evaluate->add_option("--k", eval.k, "Maximum prediction length in words")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--alpha", eval.alpha, "Significance level of the interval");
  evaluate->add_flag("--by-category", by_category, "Break DICE down by SAM category");
  evaluate->add_flag("--by-n-sam", by_n_sam, "Break DICE down by number of modifications");
  evaluate->add_flag("--errors", errors, "Report how often the baseline answer is predicted");
  evaluate->add_flag("--char-level", eval.char_level, "Character substring matching");

  std::string predictions_a;
  std::string predictions_b;
  auto *compare = app.add_subcommand("compare", "Fisher's exact test between two models");
  compare->add_option("--challenge", challenge, "Challenge set directory")->required();
  compare->add_option("--predictions-a", predictions_a, "First prediction JSON")->required();
  compare->add_option("--predictions-b", predictions_b, "Second prediction JSON")->required();
  compare->add_option("--k", eval.k, "Maximum prediction length in words")
      ->check(CLI::PositiveNumber);

  std::string type;
  auto *baseline = app.add_subcommand("baseline", "Write random or informed predictions");
  baseline->add_option("--type", type, "random or informed")
      ->required()
      ->check(CLI::IsMember({"random", "informed"}));
  baseline->add_option("--challenge", challenge, "Challenge set directory")->required();
  baseline->add_option("--seed", seed, "Seed");
  baseline->add_option("--out", out, "Output prediction JSON")->required();

  std::size_t pairs = 200;
  auto *quality = app.add_subcommand("quality", "Lexical similarity and naturality");
  quality->add_option("--challenge", challenge, "Challenge set directory")->required();
  quality->add_option("--pairs", pairs, "Passage pairs to sample")->check(CLI::PositiveNumber);
  quality->add_option("--seed", seed, "Sampling seed");

  std::string corpus;
  std::size_t window = 100;
  std::string category;
  auto *scan = app.add_subcommand("scan", "Count SAM expressions in a SQuAD-style corpus");
  scan->add_option("--corpus", corpus, "Corpus JSON")->required();
  scan->add_option("--window", window, "Characters around the answer");
  scan->add_option("--category", category, "Restrict to one category (I1..I6)");

  auto *stats = app.add_subcommand("stats", "Passage length, entity and number counts");
  stats->add_option("--challenge", challenge, "Challenge set directory")->required();

  std::size_t id = 0;
  auto *inspect = app.add_subcommand("inspect", "Show one aligned triple");
  inspect->add_option("--challenge", challenge, "Challenge set directory")->required();
  inspect->add_option("--id", id, "Triple id")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return Generate(seed, size, events, max_sam, split, out, force, jobs);
    }
    if (evaluate->parsed()) {
      return Evaluate(challenge, predictions, eval, by_category, by_n_sam, errors);
    }
    if (compare->parsed()) return Compare(challenge, predictions_a, predictions_b, eval);
    if (baseline->parsed()) return Baseline(type, challenge, seed, out);
    if (quality->parsed()) return Quality(challenge, pairs, seed);
    if (scan->parsed()) return Scan(corpus, window, category);
    if (stats->parsed()) return Stats(challenge);
    if (inspect->parsed()) {
      const samgen::ChallengeSet set = samgen::LoadChallengeSet(challenge);
      std::cout << samgen::InspectTriple(samgen::FindTriple(set, id));
      return 0;
    }
  } catch (const samgen::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kEmptyBasis ? kExitEmptyBasis : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
