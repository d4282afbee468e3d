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

#include "samgen/inspect.h"

#include <algorithm>
#include <sstream>

#include "samgen/error.h"
#include "samgen/text.h"

namespace samgen {
namespace {

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(text)) out.emplace_back(t.text);
  return out;
}

std::string JoinWords(const std::vector<std::string> &words, std::size_t begin,
                      std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace

TokenDiff DiffTokens(std::string_view before, std::string_view after) {
  const std::vector<std::string> a = Words(before);
  const std::vector<std::string> b = Words(after);
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  TokenDiff diff;
  diff.prefix = prefix;
  diff.removed.assign(a.begin() + static_cast<std::ptrdiff_t>(prefix),
                      a.end() - static_cast<std::ptrdiff_t>(suffix));
  diff.added.assign(b.begin() + static_cast<std::ptrdiff_t>(prefix),
                    b.end() - static_cast<std::ptrdiff_t>(suffix));
  return diff;
}

const TripleRecord &FindTriple(const ChallengeSet &set, std::size_t serial) {
  for (const TripleRecord &r : set.triples) {
    if (r.serial == serial) return r;
  }
  throw Error(ErrorCode::kInvalidArgument, "no triple with id " + std::to_string(serial));
}

std::string InspectTriple(const TripleRecord &record) {
  const AlignedTriple &t = record.triple;
  std::ostringstream out;
  out << "id        " << record.serial << "\n";
  out << "type      " << t.meta.question_type << "\n";
  out << "question  " << t.baseline.question << "\n";
  out << "answer    " << t.baseline.answer << " -> " << t.intervention.answer << "\n";
  out << "sam       ";
  for (SamCategory c : t.meta.sam_categories) out << SamCategoryName(c) << ' ';
  out << "(sentences";
  for (std::size_t s : t.meta.modified_sentences) out << ' ' << s;
  out << ")\n\n";

  const std::vector<std::string_view> base = SplitSentences(t.baseline.context);
  const std::vector<std::string_view> inter = SplitSentences(t.intervention.context);
  out << "[baseline]\n" << t.baseline.context << "\n\n[intervention]\n";
  for (std::size_t i = 0; i < inter.size(); ++i) {
    if (i > 0) out << ' ';
    if (i >= base.size() || base[i] == inter[i]) {
      out << inter[i];
      continue;
    }
    const TokenDiff diff = DiffTokens(base[i], inter[i]);
    const std::vector<std::string> words = Words(inter[i]);
    const std::size_t changed_end = diff.prefix + diff.added.size();
    std::string before = JoinWords(words, 0, diff.prefix);
    std::string after = JoinWords(words, changed_end, words.size());
    out << before << (before.empty() ? "" : " ") << "[+"
        << JoinWords(diff.added, 0, diff.added.size()) << "+]" << (after.empty() ? "" : " ")
        << after;
  }
  out << "\n\n[control]\n";
  std::vector<std::size_t> removed = t.meta.modified_sentences;
  std::sort(removed.begin(), removed.end());
  for (std::size_t i = 0; i < inter.size(); ++i) {
    if (i > 0) out << ' ';
    if (std::binary_search(removed.begin(), removed.end(), i)) {
      out << "[-" << inter[i] << "-]";
    } else {
      out << inter[i];
    }
  }
  out << "\n";
  return out.str();
}

}  // namespace samgen
