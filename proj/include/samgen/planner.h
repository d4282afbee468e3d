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

// Content planning: a plan is a constrained skeleton of the report (one
// slot per event) together with the question it is generated for. Plans
// are built so that removing the slots marked as modified always changes
// the answer, then instantiated into concrete events.

#ifndef SAMGEN_PLANNER_H_
#define SAMGEN_PLANNER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "samgen/model.h"
#include "samgen/rng.h"

namespace samgen {

enum class KindClass { kGoal, kOther, kAny };

struct KindRequirement {
  KindClass cls = KindClass::kAny;
  std::optional<EventKind> exact;

  bool Accepts(EventKind kind) const;
};

enum class RelationOp { kDistanceGreater, kDistanceLess };

// Attribute relation against an earlier slot.
struct Relation {
  RelationOp op = RelationOp::kDistanceGreater;
  std::size_t slot = 0;
};

struct EventConstraint {
  KindRequirement kind;
  std::vector<Relation> relations;
  std::optional<std::pair<int, int>> time_window;  // inclusive minutes
  bool modified = false;
  bool needs_coactor = false;
};

struct ContentPlan {
  std::vector<EventConstraint> slots;
  // Question with descriptor players still unset; they are bound to the
  // events in descriptor_slots at instantiation.
  QuestionForm question;
  std::vector<std::size_t> modified_slots;
  std::vector<std::size_t> descriptor_slots;

  // Exact kind per slot; throws if a slot leaves its kind open.
  std::vector<EventKind> KindSequence() const;
  int n_sam() const { return static_cast<int>(modified_slots.size()); }
};

// The question types the generator draws from.
const std::vector<QuestionForm> &QuestionCatalog();

int MinEvents(const QuestionForm &question);

// Whether a report with this event-kind sequence can carry a plan for the
// question with n_sam modified goals.
bool KindSequenceFeasible(const QuestionForm &question, std::span<const EventKind> kinds,
                          int n_sam);

// Number of distinct event-kind sequences of length n_events feasible for
// the question with n_sam modifications.
std::uint64_t KindSequenceCapacity(const QuestionForm &question, int n_events, int n_sam);

// Largest n_sam in [1, 3] for which some sequence of n_events is feasible,
// or 0 if none is.
int MaxFeasibleSam(const QuestionForm &question, int n_events);

// Throws Error(kUnsatisfiablePlan) if n_sam is outside [1, 3] or the
// question cannot be planned with n_events.
ContentPlan BuildPlan(const QuestionForm &question, int n_events, int n_sam, Rng &rng);
ContentPlan BuildPlanForKinds(const QuestionForm &question, std::span<const EventKind> kinds,
                              int n_sam, Rng &rng);

// Relations must point at earlier slots; at least one slot is modified and
// the constraints admit a solution. Throws Error(kUnsatisfiablePlan).
void ValidatePlan(const ContentPlan &plan);

struct Instantiation {
  std::vector<Event> events;  // modified events still have empty sam lists
  QuestionSpec question;
};

inline constexpr int kDefaultMaxAttempts = 100;

// Samples events satisfying every constraint, binds the question's
// descriptors and checks that the modification changes the answer. Throws
// Error(kExhaustedRetries) after max_attempts failed samples.
Instantiation Instantiate(const ContentPlan &plan, const Roster &roster, Rng &rng,
                          int max_attempts = kDefaultMaxAttempts);

// Generic constraint re-checker.
bool SatisfiesPlan(const ContentPlan &plan, std::span<const Event> events);

// Makes (event-kind sequence, question type) pairs unique across the batch
// by re-planning duplicates. Throws CapacityExceeded when the batch asks
// for more pairs of some question type than exist.
std::vector<ContentPlan> UniqueTypeOrders(std::vector<ContentPlan> plans, Rng &rng);

}  // namespace samgen

#endif  // SAMGEN_PLANNER_H_
