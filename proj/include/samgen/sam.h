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

// Building the intervention and control passages from a realised baseline.

#ifndef SAMGEN_SAM_H_
#define SAMGEN_SAM_H_

#include <map>
#include <span>

#include "samgen/lexicon.h"
#include "samgen/model.h"
#include "samgen/realiser.h"
#include "samgen/rng.h"

namespace samgen {

inline constexpr int kMaxSamPerInstance = 3;

// Uniform category, then uniform entry within it.
SamEntry SampleSamEntry(const SamLexicon &lexicon, Rng &rng);

// Applies one entry to the sentence of each modified event (keyed by event
// id). Only those sentences change; every span is recomputed.
RealisedReport MakeIntervention(const RealisedReport &baseline, std::span<const Event> events,
                                const std::map<int, SamEntry> &entries);

// Deletes the given sentences; the rest keep their text and order.
RealisedReport MakeControl(const RealisedReport &report,
                           std::span<const std::size_t> sentence_indices);

}  // namespace samgen

#endif  // SAMGEN_SAM_H_
