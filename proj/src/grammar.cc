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

#include "samgen/grammar.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "samgen/error.h"
#include "samgen/text.h"

namespace samgen {
namespace {

constexpr int kMaxDepth = 64;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitOn(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::string VariantKey(std::string_view name, std::string_view flag) {
  return std::string(name) + "@" + std::string(flag);
}

class Counter {
 public:
  explicit Counter(const Grammar &grammar) : grammar_(grammar) {}

  std::uint64_t Sequence(const Expansion &symbols, int depth) {
    std::uint64_t total = 1;
    for (const Symbol &s : symbols) total = SatMul(total, One(s, depth));
    return total;
  }

 private:
  std::uint64_t One(const Symbol &s, int depth) {
    switch (s.kind) {
      case SymbolKind::kNonTerminal: return NonTerminal(s.text, depth);
      case SymbolKind::kContextual: {
        std::uint64_t widest = 0;
        for (const std::string &flag : grammar_.Variants(s.text)) {
          widest = std::max(widest, NonTerminal(VariantKey(s.text, flag), depth));
        }
        return widest;
      }
      default: return 1;
    }
  }

  std::uint64_t NonTerminal(const std::string &name, int depth) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    if (depth > kMaxDepth || active_.count(name) != 0) {
      throw Error(ErrorCode::kDepthExceeded, "grammar recursion through '" + name + "'");
    }
    active_.insert(name);
    std::uint64_t total = 0;
    for (const Expansion &alt : grammar_.Rules(name)) {
      total = SatAdd(total, Sequence(alt, depth + 1));
    }
    active_.erase(name);
    memo_[name] = total;
    return total;
  }

  const Grammar &grammar_;
  std::map<std::string, std::uint64_t> memo_;
  std::set<std::string> active_;
};

}  // namespace

std::optional<SplitSelector> ParseSplitSelector(std::string_view name) {
  if (name == "train") return SplitSelector::kTrain;
  if (name == "eval") return SplitSelector::kEval;
  if (name == "full") return SplitSelector::kFull;
  return std::nullopt;
}

std::string_view SplitSelectorName(SplitSelector split) {
  switch (split) {
    case SplitSelector::kTrain: return "train";
    case SplitSelector::kEval: return "eval";
    case SplitSelector::kFull: return "full";
  }
  return "?";
}

bool Template::AppliesTo(EventKind kind) const {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

bool Template::InSplit(SplitSelector selector) const {
  switch (selector) {
    case SplitSelector::kTrain: return split == TemplateSplit::kTrain;
    case SplitSelector::kEval: return split == TemplateSplit::kEval;
    case SplitSelector::kFull: return true;
  }
  return false;
}

Expansion ParseSymbols(std::string_view text) {
  Expansion out;
  for (const Token &token : Tokenize(text)) {
    std::string_view t = token.text;
    Symbol s;
    if (t == "_") {
      s.kind = SymbolKind::kEmpty;
    } else if (t == "@SAM") {
      s.kind = SymbolKind::kSamAnchor;
    } else if (t.size() > 1 && t.front() == '#') {
      s.kind = SymbolKind::kAttr;
      std::string_view name = t.substr(1);
      if (name == "Actor") s.attr = Attr::kActor;
      else if (name == "Coactor") s.attr = Attr::kCoactor;
      else if (name == "Distance") s.attr = Attr::kDistance;
      else if (name == "Time") s.attr = Attr::kTime;
      else throw Error(ErrorCode::kParse, "unknown attribute slot '" + std::string(t) + "'");
    } else if (t.size() > 1 && t.front() == '$') {
      s.kind = SymbolKind::kNonTerminal;
      s.text = std::string(t.substr(1));
    } else if (t.size() > 1 && t.front() == '%') {
      s.kind = SymbolKind::kContextual;
      s.text = std::string(t.substr(1));
    } else if (t.size() > 2 && t.front() == '[' && t.back() == ']') {
      std::vector<std::string> forms = SplitOn(t.substr(1, t.size() - 2), '|');
      if (forms.size() < 3 || forms.size() > 4) {
        throw Error(ErrorCode::kParse, "verb needs base|past|gerund[|particle]: " + std::string(t));
      }
      for (std::string &f : forms) {
        if (f == "-") f.clear();
      }
      s.kind = SymbolKind::kVerb;
      s.verb = {forms[0], forms[1], forms[2], forms.size() == 4 ? forms[3] : std::string()};
      if (s.verb.base.empty() && s.verb.past.empty()) {
        throw Error(ErrorCode::kParse, "verb without base or past form: " + std::string(t));
      }
    } else {
      s.kind = SymbolKind::kLiteral;
      s.text = std::string(t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void Grammar::AddTemplate(Template t) { templates_.push_back(std::move(t)); }

void Grammar::AddRule(const std::string &name, Expansion expansion) {
  if (std::size_t at = name.find('@'); at != std::string::npos) {
    std::string base = name.substr(0, at);
    std::string flag = name.substr(at + 1);
    auto &flags = variants_[base];
    if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.push_back(flag);
  }
  rules_[name].push_back(std::move(expansion));
  ++rule_count_;
}

void Grammar::Parse(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
    try {
      if (view.starts_with("RULE ")) {
        std::size_t arrow = view.find("->");
        if (arrow == std::string_view::npos) {
          throw Error(ErrorCode::kParse, "RULE without '->'");
        }
        std::string name(Trim(view.substr(5, arrow - 5)));
        if (name.empty() || name.find(' ') != std::string::npos) {
          throw Error(ErrorCode::kParse, "bad nonterminal name '" + name + "'");
        }
        AddRule(name, ParseSymbols(view.substr(arrow + 2)));
      } else if (view.starts_with("TEMPLATE ")) {
        std::size_t colon = view.find(':');
        if (colon == std::string_view::npos) {
          throw Error(ErrorCode::kParse, "TEMPLATE without ':'");
        }
        std::istringstream head{std::string(view.substr(9, colon - 9))};
        Template t;
        std::string kinds, keyword, split;
        head >> t.id >> kinds >> keyword >> split;
        if (t.id.empty() || kinds.empty()) {
          throw Error(ErrorCode::kParse, "TEMPLATE needs an id and event kinds");
        }
        for (const std::string &k : SplitOn(kinds, ',')) {
          auto kind = ParseEventKind(k);
          if (!kind) throw Error(ErrorCode::kParse, "unknown event kind '" + k + "'");
          t.kinds.push_back(*kind);
        }
        if (!keyword.empty()) {
          if (keyword != "SPLIT" || (split != "train" && split != "eval")) {
            throw Error(ErrorCode::kParse, "expected 'SPLIT train|eval'");
          }
          t.split = split == "eval" ? TemplateSplit::kEval : TemplateSplit::kTrain;
        }
        t.symbols = ParseSymbols(view.substr(colon + 1));
        AddTemplate(std::move(t));
      } else {
        throw Error(ErrorCode::kParse, "expected TEMPLATE or RULE");
      }
    } catch (const Error &e) {
      throw Error(e.code(), where() + e.what());
    }
  }
}

const Template &Grammar::FindTemplate(std::string_view id) const {
  for (const Template &t : templates_) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown template '" + std::string(id) + "'");
}

std::vector<const Template *> Grammar::TemplatesFor(EventKind kind,
                                                    SplitSelector split) const {
  std::vector<const Template *> out;
  for (const Template &t : templates_) {
    if (t.AppliesTo(kind) && t.InSplit(split)) out.push_back(&t);
  }
  return out;
}

bool Grammar::HasRule(std::string_view name) const {
  auto it = rules_.find(name);
  return it != rules_.end() && !it->second.empty();
}

const std::vector<Expansion> &Grammar::Rules(std::string_view name) const {
  auto it = rules_.find(name);
  if (it == rules_.end() || it->second.empty()) {
    throw Error(ErrorCode::kMissingExpansion, "no rule for '" + std::string(name) + "'");
  }
  return it->second;
}

const std::vector<std::string> &Grammar::Variants(std::string_view name) const {
  auto it = variants_.find(name);
  if (it == variants_.end()) {
    throw Error(ErrorCode::kMissingExpansion,
                "no context-sensitive rules for '" + std::string(name) + "'");
  }
  return it->second;
}

const std::vector<Expansion> &Grammar::Resolve(std::string_view name,
                                               const std::vector<std::string> &flags) const {
  for (const std::string &variant : Variants(name)) {
    if (std::find(flags.begin(), flags.end(), variant) != flags.end()) {
      return Rules(VariantKey(name, variant));
    }
  }
  throw Error(ErrorCode::kMissingExpansion,
              "no variant of '" + std::string(name) + "' applies in this context");
}

void Grammar::Validate() const {
  auto check_refs = [&](const Expansion &symbols, const std::string &owner) {
    for (const Symbol &s : symbols) {
      if (s.kind == SymbolKind::kNonTerminal && !HasRule(s.text)) {
        throw Error(ErrorCode::kMissingExpansion,
                    owner + " references undefined $" + s.text);
      }
      if (s.kind == SymbolKind::kContextual && variants_.find(s.text) == variants_.end()) {
        throw Error(ErrorCode::kMissingExpansion,
                    owner + " references undefined %" + s.text);
      }
    }
  };
  for (const auto &[name, alternatives] : rules_) {
    for (const Expansion &alt : alternatives) check_refs(alt, "rule " + name);
  }
  std::set<std::string> ids;
  for (const Template &t : templates_) {
    if (!ids.insert(t.id).second) {
      throw Error(ErrorCode::kParse, "duplicate template id '" + t.id + "'");
    }
    check_refs(t.symbols, "template " + t.id);
    if (!t.AppliesTo(EventKind::kGoal)) continue;
    int anchors = 0;
    int verb_slots = 0;
    for (std::size_t i = 0; i < t.symbols.size(); ++i) {
      const Symbol &s = t.symbols[i];
      if (s.kind == SymbolKind::kNonTerminal && s.text.starts_with("V.")) ++verb_slots;
      if (s.kind != SymbolKind::kSamAnchor) continue;
      ++anchors;
      if (i + 1 == t.symbols.size() || t.symbols[i + 1].kind != SymbolKind::kNonTerminal ||
          !t.symbols[i + 1].text.starts_with("V.")) {
        throw Error(ErrorCode::kMissingExpansion,
                    "template " + t.id + ": @SAM must directly precede a $V. slot");
      }
      for (const Expansion &alt : Rules(t.symbols[i + 1].text)) {
        if (alt.empty() || alt.front().kind != SymbolKind::kVerb) {
          throw Error(ErrorCode::kMissingExpansion,
                      "rule " + t.symbols[i + 1].text + " must start with a verb");
        }
      }
    }
    if (anchors != 1 || verb_slots != 1) {
      throw Error(ErrorCode::kMissingExpansion,
                  "goal template " + t.id + " needs exactly one @SAM and one $V. slot");
    }
  }
  // Cycle check.
  Counter counter(*this);
  for (const Template &t : templates_) counter.Sequence(t.symbols, 0);
  for (const auto &[name, alternatives] : rules_) {
    for (const Expansion &alt : alternatives) counter.Sequence(alt, 0);
  }
}

std::uint64_t CountRealisations(const Expansion &symbols, const Grammar &grammar) {
  return Counter(grammar).Sequence(symbols, 0);
}

std::uint64_t CountRealisations(const Template &t, const Grammar &grammar) {
  return CountRealisations(t.symbols, grammar);
}

}  // namespace samgen
