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

// Seed templates and the generative grammar that expands them.
//
// File format (UTF-8, line oriented, '#' starts a comment line):
//
//   TEMPLATE <id> <Kind[,Kind...]> [SPLIT train|eval]: <symbols>
//   RULE <NonTerminal> -> <symbols>
//
// Symbols are whitespace separated:
//   word               literal
//   #Actor #Coactor #Distance #Time
//                      event attribute
//   @SAM               insertion point for a semantics altering modification
//   $Name              context-free nonterminal
//   %Name              context-sensitive nonterminal; its rules are declared
//                      as Name@flag and the first flag set in the
//                      realisation context selects the variant
//   [base|past|gerund|particle]
//                      verb; "-" marks a missing form, particle is optional
//   _                  empty expansion
//
// Each RULE line declares one alternative; repeated lines accumulate.

#ifndef SAMGEN_GRAMMAR_H_
#define SAMGEN_GRAMMAR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "samgen/lexicon.h"
#include "samgen/model.h"

namespace samgen {

enum class Attr { kActor, kCoactor, kDistance, kTime };
inline constexpr std::size_t kAttrCount = 4;

enum class SymbolKind { kLiteral, kAttr, kSamAnchor, kNonTerminal, kContextual, kVerb, kEmpty };

struct Symbol {
  SymbolKind kind = SymbolKind::kLiteral;
  std::string text;  // literal text or nonterminal name
  Attr attr = Attr::kActor;
  VerbLexeme verb;
};

using Expansion = std::vector<Symbol>;

enum class TemplateSplit { kTrain, kEval };
enum class SplitSelector { kTrain, kEval, kFull };

std::optional<SplitSelector> ParseSplitSelector(std::string_view name);
std::string_view SplitSelectorName(SplitSelector split);

struct Template {
  std::string id;
  std::vector<EventKind> kinds;
  TemplateSplit split = TemplateSplit::kTrain;
  Expansion symbols;

  bool AppliesTo(EventKind kind) const;
  bool InSplit(SplitSelector selector) const;
};

class Grammar {
 public:
  // Adds all TEMPLATE and RULE lines of text. source names the input in
  // error messages.
  void Parse(std::string_view text, std::string_view source = "<grammar>");

  // Checks that every referenced nonterminal has an expansion, that goal
  // templates carry exactly one @SAM followed by a verb-phrase nonterminal,
  // and that the grammar is acyclic. Throws Error on the first problem.
  void Validate() const;

  const std::vector<Template> &templates() const { return templates_; }
  const Template &FindTemplate(std::string_view id) const;
  std::vector<const Template *> TemplatesFor(EventKind kind, SplitSelector split) const;

  bool HasRule(std::string_view name) const;
  const std::vector<Expansion> &Rules(std::string_view name) const;
  // Flags declared for a context-sensitive nonterminal, in file order.
  const std::vector<std::string> &Variants(std::string_view name) const;
  // Alternatives for %name under the given flags.
  const std::vector<Expansion> &Resolve(std::string_view name,
                                        const std::vector<std::string> &flags) const;

  std::size_t rule_count() const { return rule_count_; }

  void AddTemplate(Template t);
  void AddRule(const std::string &name, Expansion expansion);

 private:
  std::vector<Template> templates_;
  std::map<std::string, std::vector<Expansion>, std::less<>> rules_;
  std::map<std::string, std::vector<std::string>, std::less<>> variants_;
  std::size_t rule_count_ = 0;
};

// Parses a symbol sequence in the notation above.
Expansion ParseSymbols(std::string_view text);

// Exact number of distinct surface strings a template can produce for one
// fixed event, treating context-sensitive nonterminals as their widest
// variant. Saturates at UINT64_MAX. Throws Error(kDepthExceeded) if the
// expansion recurses.
std::uint64_t CountRealisations(const Template &t, const Grammar &grammar);
std::uint64_t CountRealisations(const Expansion &symbols, const Grammar &grammar);

}  // namespace samgen

#endif  // SAMGEN_GRAMMAR_H_
