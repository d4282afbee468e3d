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

// SAM lexicon entries and verb inflection. An entry is a short expression
// inserted directly before a verb phrase; it dictates the form the verb must
// take afterwards ("couldn't curl in", "was prevented from curling in").

#ifndef SAMGEN_LEXICON_H_
#define SAMGEN_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "samgen/model.h"

namespace samgen {

enum class VerbForm { kBareInfinitive, kPastTense, kGerund, kToInfinitive };

std::string_view VerbFormName(VerbForm form);
std::optional<VerbForm> ParseVerbForm(std::string_view name);

struct VerbLexeme {
  std::string base;      // "curl"
  std::string past;      // "curled"
  std::string gerund;    // "curling"
  std::string particle;  // "in", may be empty

  // Inflected verb with its particle, e.g. "curling in". An empty form in the
  // lexeme raises Error(kVerbFormUnavailable).
  std::string Inflect(VerbForm form) const;

  bool operator==(const VerbLexeme &) const = default;
};

struct SamEntry {
  SamCategory category = SamCategory::kAdverbialModification;
  std::string surface;  // 1-4 words
  VerbForm verb_form = VerbForm::kPastTense;

  bool operator==(const SamEntry &) const = default;
};

class SamLexicon {
 public:
  SamLexicon() = default;
  explicit SamLexicon(std::vector<SamEntry> entries);

  // Parses "SAM <category> <verb_form> :: <surface expression>" lines.
  static SamLexicon Parse(std::string_view text);

  const std::vector<SamEntry> &entries() const { return entries_; }
  std::vector<SamEntry> ForCategory(SamCategory category) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<SamEntry> entries_;
};

// Rewrites "<pre> <verb> <post>" by inserting entry.surface in front of the
// verb and inflecting it to the form the entry governs. The particle stays
// attached to the verb. Pieces are joined with single spaces; post may be
// empty or start with punctuation that attaches to the verb phrase.
std::string InsertSam(std::string_view pre, const VerbLexeme &verb,
                      std::string_view post, const SamEntry &entry);

// The same composition without a modification (verb in past tense).
std::string ComposeVerbPhrase(std::string_view pre, const VerbLexeme &verb,
                              std::string_view post);

}  // namespace samgen

#endif  // SAMGEN_LEXICON_H_
