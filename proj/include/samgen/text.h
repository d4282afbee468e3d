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

// Whitespace tokenisation and the small amount of text normalisation shared
// by the evaluator and the quality diagnostics.

#ifndef SAMGEN_TEXT_H_
#define SAMGEN_TEXT_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace samgen {

struct Token {
  std::string_view text;
  std::size_t offset = 0;  // byte offset in the source text
};

std::vector<Token> Tokenize(std::string_view text);

// Strips ASCII punctuation from both ends of a token.
std::string_view StripEdgePunct(std::string_view token);
std::string Lowercase(std::string_view text);
bool HasDigit(std::string_view text);

// Lowercased, edge-stripped tokens; tokens that are pure punctuation vanish.
std::vector<std::string> NormalizedTokens(std::string_view text);

// Offsets (token indices) where needle occurs contiguously in haystack.
std::vector<std::size_t> FindTokenSequence(const std::vector<std::string> &haystack,
                                           const std::vector<std::string> &needle);

// Splits a passage into sentences at ". ", "! " and "? " boundaries. Each
// returned view keeps its terminal punctuation.
std::vector<std::string_view> SplitSentences(std::string_view text);

struct Mention {
  std::string text;
  std::size_t offset = 0;
};

// Given/family name inventory used to recognise player names in raw text.
class NameLexicon {
 public:
  NameLexicon() = default;
  NameLexicon(std::vector<std::string> given, std::vector<std::string> family);

  const std::vector<std::string> &given() const { return given_; }
  const std::vector<std::string> &family() const { return family_; }

  bool IsGiven(std::string_view token) const;
  bool IsFamily(std::string_view token) const;

  // Every "<Given> <Family>" occurrence, possessive "'s" excluded.
  std::vector<Mention> FindNames(std::string_view text) const;

 private:
  std::vector<std::string> given_;
  std::vector<std::string> family_;
  std::set<std::string, std::less<>> given_set_;
  std::set<std::string, std::less<>> family_set_;
};

// Every digit-bearing token followed by its unit word ("26 metres",
// "12th minute").
std::vector<Mention> FindNumbers(std::string_view text);

}  // namespace samgen

#endif  // SAMGEN_TEXT_H_
