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

#include "samgen/quality.h"

#include <algorithm>
#include <set>
#include <utility>

#include "samgen/error.h"
#include "samgen/resources.h"
#include "samgen/rng.h"
#include "samgen/text.h"

namespace samgen {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::set<std::string, std::less<>> &StopWords() {
  static const std::set<std::string, std::less<>> words = {
      "a",     "about", "after", "again", "all",   "an",    "and",   "as",   "at",
      "be",    "been",  "before", "but",  "by",    "for",   "from",  "had",  "has",
      "have",  "he",    "her",   "hers",  "herself", "him", "his",   "i",    "in",
      "into",  "is",    "it",    "its",   "just",  "more",  "no",    "not",  "of",
      "off",   "on",    "once",  "one",   "or",    "our",   "out",   "over", "she",
      "so",    "some",  "than",  "that",  "the",   "their", "them",  "then", "there",
      "they",  "this",  "to",    "too",   "under", "up",    "very",  "was",  "were",
      "what",  "when",  "which", "while", "who",   "with",  "would", "you",
  };
  return words;
}

const std::set<std::string, std::less<>> &Pronouns() {
  static const std::set<std::string, std::less<>> words = {
      "she", "her", "herself", "he", "him", "his", "himself", "they", "them", "their",
  };
  return words;
}

std::set<std::string> WordSet(std::string_view text) {
  std::vector<std::string> tokens = NormalizedTokens(text);
  return {tokens.begin(), tokens.end()};
}

template <typename Set>
double SetJaccard(const Set &a, const Set &b) {
  if (a.empty() && b.empty()) return 0;
  std::size_t shared = 0;
  for (const auto &w : a) shared += b.count(w);
  return static_cast<double>(shared) / static_cast<double>(a.size() + b.size() - shared);
}

bool IsCapitalised(std::string_view token) {
  return !token.empty() && token.front() >= 'A' && token.front() <= 'Z';
}

struct SentenceArguments {
  std::set<std::string> names;  // capitalised tokens after the first word
  bool pronoun = false;
};

SentenceArguments Arguments(std::string_view sentence) {
  SentenceArguments out;
  const std::vector<Token> tokens = Tokenize(sentence);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string_view word = StripEdgePunct(tokens[i].text);
    if (word.ends_with("'s")) word.remove_suffix(2);
    if (Pronouns().count(Lowercase(word)) > 0) out.pronoun = true;
    if (i > 0 && IsCapitalised(word)) out.names.insert(std::string(word));
  }
  return out;
}

}  // namespace

double Jaccard(std::string_view a, std::string_view b) {
  return SetJaccard(WordSet(a), WordSet(b));
}

SimilarityResult LexicalSimilarity(std::span<const std::string> paragraphs,
                                   std::size_t sample_pairs, std::uint64_t seed) {
  const std::size_t n = paragraphs.size();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two paragraphs");
  std::vector<std::set<std::string>> sets;
  sets.reserve(n);
  for (const std::string &p : paragraphs) sets.push_back(WordSet(p));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::uint64_t all = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (all <= sample_pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    Rng rng(seed);
    std::set<std::pair<std::size_t, std::size_t>> chosen;
    while (chosen.size() < sample_pairs) {
      std::size_t i = rng.Below(n);
      std::size_t j = rng.Below(n);
      if (i == j) continue;
      if (chosen.insert(std::minmax(i, j)).second) pairs.push_back(std::minmax(i, j));
    }
  }
  SimilarityResult out;
  for (const auto &[i, j] : pairs) out.mean += SetJaccard(sets[i], sets[j]);
  out.pairs = pairs.size();
  out.mean /= static_cast<double>(out.pairs);
  return out;
}

std::string ContentLemma(std::string_view token) {
  std::string word = Lowercase(StripEdgePunct(token));
  if (word.ends_with("'s")) word.resize(word.size() - 2);
  if (word.empty() || StopWords().count(word) > 0 || HasDigit(word)) return {};
  for (std::string_view suffix : {"ing", "ed", "es", "s"}) {
    if (word.size() > suffix.size() + 3 && word.ends_with(suffix)) {
      word.resize(word.size() - suffix.size());
      break;
    }
  }
  return word;
}

NaturalityResult Naturality(std::span<const std::string> paragraphs) {
  if (paragraphs.empty()) throw Error(ErrorCode::kEmptySet, "no paragraphs");
  NaturalityResult out;
  std::size_t pronoun_total = 0;
  std::size_t pronoun_bound = 0;
  for (const std::string &paragraph : paragraphs) {
    const std::vector<std::string_view> sentences = SplitSentences(paragraph);
    if (sentences.size() < 2) {
      throw Error(ErrorCode::kTooShort, "paragraph has fewer than two sentences");
    }
    std::vector<std::set<std::string>> lemmas;
    std::vector<SentenceArguments> args;
    for (std::string_view s : sentences) {
      std::set<std::string> set;
      for (const Token &t : Tokenize(s)) {
        if (std::string lemma = ContentLemma(t.text); !lemma.empty()) set.insert(lemma);
      }
      lemmas.push_back(std::move(set));
      args.push_back(Arguments(s));
    }
    double lemma_sum = 0;
    double argument_sum = 0;
    for (std::size_t i = 1; i < sentences.size(); ++i) {
      lemma_sum += SetJaccard(lemmas[i - 1], lemmas[i]);
      bool shared_name = std::any_of(args[i].names.begin(), args[i].names.end(),
                                     [&](const std::string &n) {
                                       return args[i - 1].names.count(n) > 0;
                                     });
      bool resolvable_pronoun = args[i].pronoun && !args[i - 1].names.empty();
      argument_sum += shared_name || resolvable_pronoun ? 1.0 : 0.0;
    }
    const double adjacent = static_cast<double>(sentences.size() - 1);
    out.lemma_overlap += lemma_sum / adjacent;
    out.argument_overlap += argument_sum / adjacent;

    // Pronoun occurrences with a capitalised name earlier in the paragraph.
    bool named = false;
    const std::vector<Token> tokens = Tokenize(paragraph);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string_view word = StripEdgePunct(tokens[i].text);
      if (Pronouns().count(Lowercase(word)) > 0) {
        ++pronoun_total;
        pronoun_bound += named ? 1 : 0;
      }
      bool sentence_initial = i == 0 || tokens[i - 1].text.ends_with('.');
      if (!sentence_initial && IsCapitalised(word)) named = true;
    }
  }
  out.paragraphs = paragraphs.size();
  out.lemma_overlap /= static_cast<double>(out.paragraphs);
  out.argument_overlap /= static_cast<double>(out.paragraphs);
  out.score = (out.lemma_overlap + out.argument_overlap) / 2;
  out.pronoun_antecedent =
      pronoun_total == 0 ? 1.0
                         : static_cast<double>(pronoun_bound) / static_cast<double>(pronoun_total);
  return out;
}

ScanResult ScanCorpus(std::span<const ScanPassage> passages, std::span<const SamEntry> lexicon,
                      std::size_t window) {
  std::vector<std::vector<std::string>> needles;
  for (const SamEntry &e : lexicon) {
    std::vector<std::string> tokens = NormalizedTokens(e.surface);
    if (!tokens.empty()) needles.push_back(std::move(tokens));
  }
  ScanResult out;
  out.passages = passages.size();
  for (const ScanPassage &p : passages) {
    const std::vector<Token> tokens = Tokenize(p.text);
    std::vector<std::string> words;
    for (const Token &t : tokens) words.push_back(Lowercase(StripEdgePunct(t.text)));
    bool found = false;
    bool near = false;
    for (const std::vector<std::string> &needle : needles) {
      for (std::size_t at : FindTokenSequence(words, needle)) {
        found = true;
        const std::size_t begin = tokens[at].offset;
        const Token &last = tokens[at + needle.size() - 1];
        const std::size_t end = last.offset + last.text.size();
        for (const Span &answer : p.answers) {
          std::size_t gap = 0;
          if (end <= answer.begin) {
            gap = answer.begin - end;
          } else if (answer.end() <= begin) {
            gap = begin - answer.end();
          }
          near = near || gap <= window;
        }
      }
    }
    out.with_expression += found ? 1 : 0;
    out.near_answer += near ? 1 : 0;
  }
  if (out.passages > 0) {
    out.fraction = static_cast<double>(out.with_expression) / static_cast<double>(out.passages);
    out.near_fraction =
        static_cast<double>(out.near_answer) / static_cast<double>(out.passages);
  }
  return out;
}

std::vector<ScanPassage> LoadSquadCorpus(const std::filesystem::path &path) {
  std::vector<ScanPassage> out;
  try {
    const json corpus = json::parse(ReadFile(path));
    for (const json &article : corpus.at("data")) {
      for (const json &paragraph : article.at("paragraphs")) {
        ScanPassage p;
        p.text = paragraph.at("context").get<std::string>();
        for (const json &qa : paragraph.value("qas", json::array())) {
          for (const json &answer : qa.value("answers", json::array())) {
            p.answers.push_back({answer.at("answer_start").get<std::size_t>(),
                                 answer.at("text").get<std::string>().size()});
          }
        }
        out.push_back(std::move(p));
      }
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return out;
}

ordered_json QualityJson(const SimilarityResult &similarity,
                         const NaturalityResult &naturality) {
  ordered_json nat;
  nat["score"] = naturality.score;
  nat["indices"] = {"adjacent content lemma overlap", "adjacent argument overlap"};
  nat["lemma_overlap"] = naturality.lemma_overlap;
  nat["argument_overlap"] = naturality.argument_overlap;
  nat["pronoun_antecedent"] = naturality.pronoun_antecedent;
  nat["paragraphs"] = naturality.paragraphs;
  ordered_json out;
  out["lexical_similarity"] = similarity.mean;
  out["sample_size"] = similarity.pairs;
  out["naturality"] = nat;
  return out;
}

ordered_json ScanJson(const ScanResult &scan, std::size_t window) {
  ordered_json out;
  out["passages"] = scan.passages;
  out["with_expression"] = scan.with_expression;
  out["fraction"] = scan.fraction;
  out["window"] = window;
  out["near_answer"] = scan.near_answer;
  out["near_fraction"] = scan.near_fraction;
  return out;
}

}  // namespace samgen
