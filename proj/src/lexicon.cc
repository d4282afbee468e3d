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

#include "samgen/lexicon.h"

#include <cctype>
#include <sstream>

#include "samgen/error.h"
#include "samgen/text.h"

namespace samgen {
namespace {

bool Attaches(std::string_view post) {
  if (post.empty()) return true;
  char c = post.front();
  return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' ||
         post.starts_with("'s");
}

std::string Join(std::string_view pre, std::string_view middle, std::string_view post) {
  std::string out(pre);
  if (!out.empty() && !middle.empty()) out += ' ';
  out += middle;
  if (!Attaches(post)) out += ' ';
  out += post;
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view VerbFormName(VerbForm form) {
  switch (form) {
    case VerbForm::kBareInfinitive: return "BareInfinitive";
    case VerbForm::kPastTense: return "PastTense";
    case VerbForm::kGerund: return "Gerund";
    case VerbForm::kToInfinitive: return "ToInfinitive";
  }
  return "?";
}

std::optional<VerbForm> ParseVerbForm(std::string_view name) {
  for (VerbForm f : {VerbForm::kBareInfinitive, VerbForm::kPastTense, VerbForm::kGerund,
                     VerbForm::kToInfinitive}) {
    if (VerbFormName(f) == name) return f;
  }
  return std::nullopt;
}

std::string VerbLexeme::Inflect(VerbForm form) const {
  const std::string *word = nullptr;
  switch (form) {
    case VerbForm::kBareInfinitive:
    case VerbForm::kToInfinitive: word = &base; break;
    case VerbForm::kPastTense: word = &past; break;
    case VerbForm::kGerund: word = &gerund; break;
  }
  if (word->empty()) {
    throw Error(ErrorCode::kVerbFormUnavailable,
                "verb '" + base + "/" + past + "' has no " +
                    std::string(VerbFormName(form)) + " form");
  }
  return particle.empty() ? *word : *word + " " + particle;
}

SamLexicon::SamLexicon(std::vector<SamEntry> entries) : entries_(std::move(entries)) {
  for (const SamEntry &e : entries_) {
    std::size_t words = Tokenize(e.surface).size();
    if (words < 1 || words > 4) {
      throw Error(ErrorCode::kInvalidArgument,
                  "SAM expression '" + e.surface + "' must have 1-4 words");
    }
  }
}

SamLexicon SamLexicon::Parse(std::string_view text) {
  std::vector<SamEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto fail = [&](const std::string &what) {
      throw Error(ErrorCode::kParse, "lexicon line " + std::to_string(line_no) + ": " + what);
    };
    std::size_t sep = view.find("::");
    if (sep == std::string_view::npos) fail("missing '::'");
    std::istringstream head{std::string(view.substr(0, sep))};
    std::string keyword, category, form;
    head >> keyword >> category >> form;
    if (keyword != "SAM") fail("expected SAM keyword");
    auto parsed_category = ParseSamCategory(category);
    if (!parsed_category) fail("unknown category '" + category + "'");
    auto parsed_form = ParseVerbForm(form);
    if (!parsed_form) fail("unknown verb form '" + form + "'");
    std::string surface(Trim(view.substr(sep + 2)));
    if (surface.empty()) fail("empty expression");
    entries.push_back({*parsed_category, surface, *parsed_form});
  }
  return SamLexicon(std::move(entries));
}

std::vector<SamEntry> SamLexicon::ForCategory(SamCategory category) const {
  std::vector<SamEntry> out;
  for (const SamEntry &e : entries_) {
    if (e.category == category) out.push_back(e);
  }
  return out;
}

std::string InsertSam(std::string_view pre, const VerbLexeme &verb, std::string_view post,
                      const SamEntry &entry) {
  return Join(pre, entry.surface + " " + verb.Inflect(entry.verb_form), post);
}

std::string ComposeVerbPhrase(std::string_view pre, const VerbLexeme &verb,
                              std::string_view post) {
  return Join(pre, verb.Inflect(VerbForm::kPastTense), post);
}

}  // namespace samgen
