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

// Surface realisation: one sentence per event, produced by expanding a seed
// template with the generative grammar. Sentences are kept as a skeleton
// (text before the verb phrase, the verb, text after it); modifications
// are inserted into the skeleton without re-running the grammar.

#ifndef SAMGEN_REALISER_H_
#define SAMGEN_REALISER_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "samgen/grammar.h"
#include "samgen/lexicon.h"
#include "samgen/model.h"
#include "samgen/rng.h"

namespace samgen {

struct Span {
  std::size_t begin = 0;
  std::size_t length = 0;
  std::size_t end() const { return begin + length; }
  bool operator==(const Span &) const = default;
};

using AttrSpans = std::array<std::optional<Span>, kAttrCount>;

inline std::optional<Span> &At(AttrSpans &spans, Attr attr) {
  return spans[static_cast<std::size_t>(attr)];
}
inline const std::optional<Span> &At(const AttrSpans &spans, Attr attr) {
  return spans[static_cast<std::size_t>(attr)];
}

struct RealisationContext {
  std::size_t position = 0;           // sentence index in the report
  std::set<std::size_t> mentioned;    // players named in earlier sentences
  // Alternative picked for each context-sensitive nonterminal in the
  // previous sentence; not repeated when another alternative exists.
  std::map<std::string, std::size_t> previous_choice;
  const SamEntry *sam = nullptr;      // modification for the @SAM anchor

  // Flags that select context-sensitive variants for this event.
  std::vector<std::string> Flags(const Event &event) const;
};

struct RealisedSentence {
  int event_id = 0;
  std::string template_id;
  std::string pre;                  // text up to the @SAM anchor
  std::optional<VerbLexeme> verb;   // verb following the anchor
  std::string post;                 // text after the verb phrase
  AttrSpans pre_spans;              // relative to pre
  AttrSpans post_spans;             // relative to post
  std::optional<SamEntry> sam;

  std::string text;                 // rendered sentence
  AttrSpans spans;                  // relative to text

  // Recomputes text and spans from the skeleton and the current sam entry.
  void Render();
};

struct RealisedReport {
  std::vector<RealisedSentence> sentences;
  std::string text;
  std::vector<Span> boundaries;  // sentence ranges within text

  // Rebuilds text and boundaries from the sentences (single-space joins).
  void Assemble();

  std::optional<std::size_t> SentenceOf(int event_id) const;
  // Absolute span of an attribute of the event realised in sentence i.
  std::optional<Span> AttrSpan(std::size_t sentence, Attr attr) const;
};

// Realises one event. Throws Error(kMissingExpansion) for grammar gaps or a
// template that does not surface every event attribute exactly once, and
// Error(kVerbFormUnavailable) when the modification needs a missing form.
RealisedSentence RealiseSentence(const Event &event, const Template &t,
                                 const Grammar &grammar, const Roster &roster,
                                 RealisationContext &ctx, Rng &rng);

// Realises a whole report with one randomly chosen applicable template per
// event, carrying context from sentence to sentence. No modification is
// applied here.
RealisedReport RealiseReport(std::span<const Event> events, const Grammar &grammar,
                             SplitSelector split, const Roster &roster, Rng &rng);

// Same, with the template for every event fixed by the caller.
RealisedReport RealiseReport(std::span<const Event> events,
                             std::span<const Template *const> templates,
                             const Grammar &grammar, const Roster &roster, Rng &rng);

}  // namespace samgen

#endif  // SAMGEN_REALISER_H_
