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

#include "samgen/text.h"

#include <cctype>

namespace samgen {
namespace {

bool IsPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

std::string_view DropPossessive(std::string_view token) {
  if (token.size() > 2 && token.substr(token.size() - 2) == "'s") {
    token.remove_suffix(2);
  }
  return token;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

std::string_view StripEdgePunct(std::string_view token) {
  while (!token.empty() && IsPunct(token.front())) token.remove_prefix(1);
  while (!token.empty() && IsPunct(token.back())) token.remove_suffix(1);
  return token;
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool HasDigit(std::string_view text) {
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::vector<std::string> NormalizedTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(text)) {
    std::string_view stripped = StripEdgePunct(t.text);
    if (!stripped.empty()) out.push_back(Lowercase(stripped));
  }
  return out;
}

std::vector<std::size_t> FindTokenSequence(const std::vector<std::string> &haystack,
                                           const std::vector<std::string> &needle) {
  std::vector<std::size_t> hits;
  if (needle.empty() || needle.size() > haystack.size()) return hits;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size() && match; ++j) {
      match = haystack[i + j] == needle[j];
    }
    if (match) hits.push_back(i);
  }
  return hits;
}

std::vector<std::string_view> SplitSentences(std::string_view text) {
  std::vector<std::string_view> sentences;
  auto push = [&](std::string_view piece) {
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty()) sentences.push_back(piece);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool end_mark = c == '.' || c == '!' || c == '?';
    if (end_mark && (i + 1 == text.size() || text[i + 1] == ' ')) {
      push(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  push(text.substr(start));
  return sentences;
}

NameLexicon::NameLexicon(std::vector<std::string> given, std::vector<std::string> family)
    : given_(std::move(given)), family_(std::move(family)) {
  given_set_.insert(given_.begin(), given_.end());
  family_set_.insert(family_.begin(), family_.end());
}

bool NameLexicon::IsGiven(std::string_view token) const {
  return given_set_.find(token) != given_set_.end();
}

bool NameLexicon::IsFamily(std::string_view token) const {
  return family_set_.find(token) != family_set_.end();
}

std::vector<Mention> NameLexicon::FindNames(std::string_view text) const {
  std::vector<Mention> names;
  std::vector<Token> tokens = Tokenize(text);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string_view first = StripEdgePunct(tokens[i].text);
    // The given name must not be cut off by punctuation ("Naomi, Daniel").
    if (first.size() != tokens[i].text.size() && !tokens[i].text.empty() &&
        IsPunct(tokens[i].text.back())) {
      continue;
    }
    std::string_view second = StripEdgePunct(DropPossessive(tokens[i + 1].text));
    if (!IsGiven(first) || !IsFamily(second)) continue;
    std::size_t offset = tokens[i].offset + (tokens[i].text.find(first));
    names.push_back({std::string(first) + " " + std::string(second), offset});
    ++i;
  }
  return names;
}

std::vector<Mention> FindNumbers(std::string_view text) {
  std::vector<Mention> numbers;
  std::vector<Token> tokens = Tokenize(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string_view number = StripEdgePunct(tokens[i].text);
    if (!HasDigit(number)) continue;
    std::size_t offset = tokens[i].offset + tokens[i].text.find(number);
    std::string mention(number);
    if (i + 1 < tokens.size() && !IsPunct(tokens[i].text.back())) {
      std::string_view unit = StripEdgePunct(tokens[i + 1].text);
      if (!unit.empty() && !HasDigit(unit)) mention += " " + std::string(unit);
    }
    numbers.push_back({std::move(mention), offset});
  }
  return numbers;
}

}  // namespace samgen
