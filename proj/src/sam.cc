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

#include "samgen/sam.h"

#include <set>

#include "samgen/error.h"

namespace samgen {

SamEntry SampleSamEntry(const SamLexicon &lexicon, Rng &rng) {
  std::vector<SamCategory> available;
  for (SamCategory c : kAllSamCategories) {
    if (!lexicon.ForCategory(c).empty()) available.push_back(c);
  }
  if (available.empty()) throw Error(ErrorCode::kInvalidArgument, "SAM lexicon is empty");
  std::vector<SamEntry> entries = lexicon.ForCategory(rng.Pick(available));
  return rng.Pick(entries);
}

RealisedReport MakeIntervention(const RealisedReport &baseline, std::span<const Event> events,
                                const std::map<int, SamEntry> &entries) {
  if (entries.empty() || entries.size() > kMaxSamPerInstance) {
    throw Error(ErrorCode::kInvalidArgument,
                "an intervention needs between 1 and 3 modifications, got " +
                    std::to_string(entries.size()));
  }
  std::set<int> modified;
  for (const Event &e : events) {
    if (e.modified) modified.insert(e.id);
  }
  for (const auto &[event_id, entry] : entries) {
    if (modified.count(event_id) == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "event " + std::to_string(event_id) + " is not marked as modified");
    }
  }
  if (modified.size() != entries.size()) {
    throw Error(ErrorCode::kInvalidArgument, "every modified event needs exactly one entry");
  }
  RealisedReport out = baseline;
  for (const auto &[event_id, entry] : entries) {
    auto index = out.SentenceOf(event_id);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no sentence realises event " + std::to_string(event_id));
    }
    RealisedSentence &sentence = out.sentences[*index];
    sentence.sam = entry;
    sentence.Render();
  }
  out.Assemble();
  return out;
}

RealisedReport MakeControl(const RealisedReport &report,
                           std::span<const std::size_t> sentence_indices) {
  std::set<std::size_t> drop(sentence_indices.begin(), sentence_indices.end());
  for (std::size_t i : drop) {
    if (i >= report.sentences.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sentence index " + std::to_string(i) + " out of range");
    }
  }
  if (!report.sentences.empty() && drop.size() == report.sentences.size()) {
    throw Error(ErrorCode::kAllSentencesRemoved, "control would leave an empty passage");
  }
  RealisedReport out;
  for (std::size_t i = 0; i < report.sentences.size(); ++i) {
    if (drop.count(i) == 0) out.sentences.push_back(report.sentences[i]);
  }
  out.Assemble();
  return out;
}

}  // namespace samgen
