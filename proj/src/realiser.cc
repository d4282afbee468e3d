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

#include "samgen/realiser.h"

#include <cctype>

#include "samgen/error.h"
#include "samgen/text.h"

namespace samgen {
namespace {

constexpr int kMaxDepth = 64;

struct Piece {
  enum Kind { kWord, kAttr, kAnchor, kVerb };

  Piece(Kind k, std::string t = {}) : kind(k), text(std::move(t)) {}

  Kind kind;
  std::string text;
  Attr attr = Attr::kActor;
  VerbLexeme verb;
};

bool Glues(std::string_view word) {
  if (word.empty()) return true;
  char c = word.front();
  return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' ||
         word.starts_with("'s");
}

std::string AttrText(const Event &event, Attr attr, const Roster &roster) {
  switch (attr) {
    case Attr::kActor: return roster.Name(event.actor);
    case Attr::kCoactor:
      if (!event.coactor) {
        throw Error(ErrorCode::kMissingExpansion,
                    "template realises a second participant the event lacks");
      }
      return roster.Name(*event.coactor);
    case Attr::kDistance:
      if (!event.distance) {
        throw Error(ErrorCode::kMissingExpansion, "template realises a missing distance");
      }
      return DistanceText(*event.distance);
    case Attr::kTime: return MinuteText(event.time);
  }
  return {};
}

class Expander {
 public:
  Expander(const Event &event, const Grammar &grammar, const Roster &roster,
           const RealisationContext &ctx, Rng &rng)
      : event_(event), grammar_(grammar), roster_(roster), ctx_(ctx), rng_(rng),
        flags_(ctx.Flags(event)) {}

  void Run(const Expansion &symbols, int depth) {
    if (depth > kMaxDepth) {
      throw Error(ErrorCode::kDepthExceeded, "expansion nested too deeply");
    }
    for (const Symbol &s : symbols) {
      switch (s.kind) {
        case SymbolKind::kLiteral: pieces_.emplace_back(Piece::kWord, s.text); break;
        case SymbolKind::kEmpty: break;
        case SymbolKind::kSamAnchor: pieces_.emplace_back(Piece::kAnchor); break;
        case SymbolKind::kAttr: {
          Piece p(Piece::kAttr, AttrText(event_, s.attr, roster_));
          p.attr = s.attr;
          pieces_.push_back(std::move(p));
          break;
        }
        case SymbolKind::kVerb: {
          Piece p(Piece::kVerb);
          p.verb = s.verb;
          pieces_.push_back(std::move(p));
          break;
        }
        case SymbolKind::kNonTerminal: {
          const auto &alternatives = grammar_.Rules(s.text);
          Run(rng_.Pick(alternatives), depth + 1);
          break;
        }
        case SymbolKind::kContextual: {
          const auto &alternatives = grammar_.Resolve(s.text, flags_);
          std::size_t pick = rng_.Below(alternatives.size());
          auto prev = ctx_.previous_choice.find(s.text);
          if (prev != ctx_.previous_choice.end() && alternatives.size() > 1 &&
              pick == prev->second) {
            // Draw from the remaining alternatives.
            pick = rng_.Below(alternatives.size() - 1);
            if (pick >= prev->second) ++pick;
          }
          choices_[s.text] = pick;
          Run(alternatives[pick], depth + 1);
          break;
        }
      }
    }
  }

  std::vector<Piece> &pieces() { return pieces_; }
  std::map<std::string, std::size_t> &choices() { return choices_; }

 private:
  const Event &event_;
  const Grammar &grammar_;
  const Roster &roster_;
  const RealisationContext &ctx_;
  Rng &rng_;
  std::vector<std::string> flags_;
  std::vector<Piece> pieces_;
  std::map<std::string, std::size_t> choices_;
};

void AppendWord(std::string &out, std::string_view word) {
  if (word.empty()) return;
  if (!out.empty() && !Glues(word)) out += ' ';
  out += word;
}

void Build(std::span<const Piece> pieces, std::string &text, AttrSpans &spans) {
  for (const Piece &p : pieces) {
    switch (p.kind) {
      case Piece::kWord: AppendWord(text, p.text); break;
      case Piece::kVerb: AppendWord(text, p.verb.Inflect(VerbForm::kPastTense)); break;
      case Piece::kAttr: {
        AppendWord(text, p.text);
        At(spans, p.attr) = Span{text.size() - p.text.size(), p.text.size()};
        break;
      }
      case Piece::kAnchor: break;
    }
  }
}

bool IsPronoun(std::string_view token) {
  std::string t = Lowercase(StripEdgePunct(token));
  return t == "she" || t == "her" || t == "herself";
}

}  // namespace

std::vector<std::string> RealisationContext::Flags(const Event &event) const {
  std::vector<std::string> flags;
  flags.push_back(position == 0 ? "first" : "later");
  flags.push_back(event.coactor ? "assist" : "solo");
  flags.push_back(Lowercase(EventKindName(event.kind)));
  flags.push_back("default");
  return flags;
}

void RealisedSentence::Render() {
  spans = pre_spans;
  if (!verb) {
    if (sam) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sentence from template " + template_id + " has no @SAM verb phrase");
    }
    text = pre;
    return;
  }
  text = sam ? InsertSam(pre, *verb, post, *sam) : ComposeVerbPhrase(pre, *verb, post);
  const std::size_t offset = text.size() - post.size();
  for (std::size_t i = 0; i < kAttrCount; ++i) {
    if (post_spans[i]) spans[i] = Span{post_spans[i]->begin + offset, post_spans[i]->length};
  }
}

void RealisedReport::Assemble() {
  text.clear();
  boundaries.clear();
  for (const RealisedSentence &s : sentences) {
    if (!text.empty()) text += ' ';
    boundaries.push_back({text.size(), s.text.size()});
    text += s.text;
  }
}

std::optional<std::size_t> RealisedReport::SentenceOf(int event_id) const {
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].event_id == event_id) return i;
  }
  return std::nullopt;
}

std::optional<Span> RealisedReport::AttrSpan(std::size_t sentence, Attr attr) const {
  const auto &rel = At(sentences.at(sentence).spans, attr);
  if (!rel) return std::nullopt;
  return Span{boundaries.at(sentence).begin + rel->begin, rel->length};
}

RealisedSentence RealiseSentence(const Event &event, const Template &t,
                                 const Grammar &grammar, const Roster &roster,
                                 RealisationContext &ctx, Rng &rng) {
  if (!t.AppliesTo(event.kind)) {
    throw Error(ErrorCode::kInvalidArgument, "template " + t.id + " does not apply to " +
                                                 std::string(EventKindName(event.kind)));
  }
  Expander expander(event, grammar, roster, ctx, rng);
  expander.Run(t.symbols, 0);
  std::vector<Piece> &pieces = expander.pieces();

  std::array<int, kAttrCount> seen{};
  for (const Piece &p : pieces) {
    if (p.kind == Piece::kAttr) ++seen[static_cast<std::size_t>(p.attr)];
  }
  const std::array<bool, kAttrCount> present = {true, event.coactor.has_value(),
                                                event.distance.has_value(), true};
  for (std::size_t i = 0; i < kAttrCount; ++i) {
    if (seen[i] != (present[i] ? 1 : 0)) {
      throw Error(ErrorCode::kMissingExpansion,
                  "template " + t.id + " must realise every event attribute exactly once");
    }
  }

  RealisedSentence sentence;
  sentence.event_id = event.id;
  sentence.template_id = t.id;
  std::size_t anchor = pieces.size();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].kind == Piece::kAnchor) {
      anchor = i;
      break;
    }
  }
  if (anchor == pieces.size()) {
    Build(pieces, sentence.pre, sentence.pre_spans);
  } else {
    if (anchor + 1 >= pieces.size() || pieces[anchor + 1].kind != Piece::kVerb) {
      throw Error(ErrorCode::kMissingExpansion,
                  "template " + t.id + ": @SAM is not followed by a verb");
    }
    Build(std::span(pieces).first(anchor), sentence.pre, sentence.pre_spans);
    sentence.verb = pieces[anchor + 1].verb;
    Build(std::span(pieces).subspan(anchor + 2), sentence.post, sentence.post_spans);
  }
  if (!sentence.pre.empty()) {
    sentence.pre[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence.pre[0])));
  }
  if (ctx.sam != nullptr) sentence.sam = *ctx.sam;
  sentence.Render();

  // A pronoun needs its antecedent named earlier in the same sentence.
  const auto &actor = At(sentence.spans, Attr::kActor);
  for (const Token &token : Tokenize(sentence.text)) {
    if (IsPronoun(token.text) && (!actor || token.offset < actor->begin)) {
      throw Error(ErrorCode::kMissingExpansion,
                  "template " + t.id + " uses a pronoun before naming its antecedent");
    }
  }

  ctx.previous_choice = std::move(expander.choices());
  ctx.mentioned.insert(event.actor.index);
  if (event.coactor) ctx.mentioned.insert(event.coactor->index);
  return sentence;
}

RealisedReport RealiseReport(std::span<const Event> events,
                             std::span<const Template *const> templates,
                             const Grammar &grammar, const Roster &roster, Rng &rng) {
  if (templates.size() != events.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one template per event required");
  }
  RealisedReport report;
  RealisationContext ctx;
  for (std::size_t i = 0; i < events.size(); ++i) {
    ctx.position = i;
    report.sentences.push_back(
        RealiseSentence(events[i], *templates[i], grammar, roster, ctx, rng));
  }
  report.Assemble();
  return report;
}

RealisedReport RealiseReport(std::span<const Event> events, const Grammar &grammar,
                             SplitSelector split, const Roster &roster, Rng &rng) {
  std::vector<const Template *> chosen;
  for (const Event &e : events) {
    auto candidates = grammar.TemplatesFor(e.kind, split);
    if (candidates.empty()) {
      throw Error(ErrorCode::kMissingExpansion,
                  "no " + std::string(SplitSelectorName(split)) + " template for " +
                      std::string(EventKindName(e.kind)));
    }
    chosen.push_back(rng.Pick(candidates));
  }
  return RealiseReport(events, chosen, grammar, roster, rng);
}

}  // namespace samgen
