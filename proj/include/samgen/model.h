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

// Domain types shared by every stage of the pipeline, and the symbolic
// answer oracle: given a question and a structured match report it computes
// the gold answer directly from the events, independent of any text.

#ifndef SAMGEN_MODEL_H_
#define SAMGEN_MODEL_H_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace samgen {

enum class EventKind {
  kGoal,
  kFoul,
  kClearance,
  kSave,
  kCorner,
  kSubstitution,
  kInjury,
};

inline constexpr std::array<EventKind, 7> kAllEventKinds = {
    EventKind::kGoal,   EventKind::kFoul,         EventKind::kClearance,
    EventKind::kSave,   EventKind::kCorner,       EventKind::kSubstitution,
    EventKind::kInjury,
};
inline constexpr std::array<EventKind, 6> kOtherEventKinds = {
    EventKind::kFoul,   EventKind::kClearance,    EventKind::kSave,
    EventKind::kCorner, EventKind::kSubstitution, EventKind::kInjury,
};

inline bool IsGoal(EventKind kind) { return kind == EventKind::kGoal; }
std::string_view EventKindName(EventKind kind);
std::optional<EventKind> ParseEventKind(std::string_view name);

enum class SamCategory {
  kModalNegation,              // I1
  kAdverbialModification,      // I2
  kImplicitNegation,           // I3
  kExplicitNegation,           // I4
  kPolarityReversing,          // I5
  kNegatedPolarityPreserving,  // I6
};

inline constexpr std::array<SamCategory, 6> kAllSamCategories = {
    SamCategory::kModalNegation,     SamCategory::kAdverbialModification,
    SamCategory::kImplicitNegation,  SamCategory::kExplicitNegation,
    SamCategory::kPolarityReversing, SamCategory::kNegatedPolarityPreserving,
};

// "I1" .. "I6".
std::string_view SamCategoryName(SamCategory category);
// Accepts "I1".."I6" as well as the descriptive label.
std::optional<SamCategory> ParseSamCategory(std::string_view name);

struct PlayerRef {
  std::size_t index = 0;
  friend auto operator<=>(const PlayerRef &, const PlayerRef &) = default;
};

class Roster {
 public:
  Roster() = default;
  explicit Roster(std::vector<std::string> names);

  const std::string &Name(PlayerRef player) const;
  std::optional<PlayerRef> Find(std::string_view name) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

// Goal bounds.
inline constexpr int kMinDistance = 5;
inline constexpr int kMaxDistance = 50;
inline constexpr int kMinMinute = 1;
inline constexpr int kMaxMinute = 90;

struct Event {
  int id = 0;
  EventKind kind = EventKind::kGoal;
  PlayerRef actor;
  std::optional<PlayerRef> coactor;
  std::optional<int> distance;  // metres, goals only
  int time = 0;                 // match minute
  bool modified = false;
  std::vector<SamCategory> sam;  // empty iff !modified

  bool operator==(const Event &) const = default;
};

// Checks the per-report invariants: goal attribute ranges, pairwise distinct
// goal distances, strictly increasing times and modified <=> sam non-empty.
// Throws Error(kInvalidArgument) on the first violation.
void ValidateReport(std::span<const Event> events);

enum class Target { kActor, kCoactor, kTime, kDistance };
enum class Role { kActor, kCoactor };

// Identifies one event of a report through a player taking part in it, e.g.
// "the foul suffered by X" or "the goal scored by Y".
struct EventDescriptor {
  EventKind kind = EventKind::kGoal;
  Role role = Role::kActor;
  PlayerRef player;

  bool Matches(const Event &event) const;
  bool operator==(const EventDescriptor &) const = default;
};

// Canonical descriptor role for anchoring questions on an event kind.
Role AnchorRole(EventKind kind);

enum class OrderAttr { kPosition, kTime };
enum class Extremum { kMax, kMin };
enum class Measure { kDistance, kTime };
enum class Direction { kBefore, kAfter };
enum class Comparison { kEarlier, kLater, kFarther, kCloser };

// "Who scored the second goal?" Negative ranks count from the end.
struct RetrievalOrder {
  OrderAttr attr = OrderAttr::kTime;
  int rank = 0;
  Target target = Target::kActor;
  bool operator==(const RetrievalOrder &) const = default;
};

// "Who scored the farthest goal?"
struct ArgSelect {
  Extremum agg = Extremum::kMax;
  Measure over = Measure::kDistance;
  Target target = Target::kActor;
  bool operator==(const ArgSelect &) const = default;
};

// "Who scored the last goal before X was fouled?" Resolves to the nearest
// qualifying goal on the requested side of the anchor.
struct Bridge {
  Direction direction = Direction::kBefore;
  EventDescriptor anchor;
  Target target = Target::kActor;
  bool operator==(const Bridge &) const = default;
};

// "Who scored earlier, X or Y?"
struct Compare {
  Comparison agg = Comparison::kEarlier;
  std::array<EventDescriptor, 2> pair;
  Target target = Target::kActor;
  bool operator==(const Compare &) const = default;
};

using QuestionForm = std::variant<RetrievalOrder, ArgSelect, Bridge, Compare>;

struct QuestionSpec {
  QuestionForm form;
  std::string surface;
};

Target QuestionTarget(const QuestionForm &form);

// Stable identifier of the question type, excluding the players named in
// descriptors, e.g. "argselect:max:distance:actor".
std::string QuestionTypeKey(const QuestionForm &form);

// Natural-language question text.
std::string RealiseQuestion(const QuestionForm &form, const Roster &roster);

enum class AnswerKind { kPlayer, kMinute, kDistance };

struct Answer {
  AnswerKind kind = AnswerKind::kPlayer;
  int value = 0;     // player index, minute or metres
  int event_id = 0;  // event the answer was read from

  friend bool operator==(const Answer &a, const Answer &b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

std::string DistanceText(int metres);  // "26 metres"
std::string MinuteText(int minute);    // "12th minute"
std::string AnswerText(const Answer &answer, const Roster &roster);

// Computes the gold answer. With honor_sam, events carrying a modification
// are treated as not having happened. Throws Error(kNoQualifyingEvent) when
// too few events remain to answer the question.
Answer OracleAnswer(const QuestionForm &question, std::span<const Event> events,
                    bool honor_sam);
inline Answer OracleAnswer(const QuestionSpec &question,
                           std::span<const Event> events, bool honor_sam) {
  return OracleAnswer(question.form, events, honor_sam);
}

// Copy of events with every modified event removed (the control report).
std::vector<Event> WithoutModified(std::span<const Event> events);

struct MRCInstance {
  std::string id;
  std::string question;
  std::string context;
  std::string answer;
  std::size_t answer_start = 0;
};

// True iff context[answer_start, answer_start + |answer|) == answer.
bool SpanMatches(const MRCInstance &instance);

struct TripleMeta {
  std::string question_type;
  std::vector<SamCategory> sam_categories;
  int n_sam = 0;
  std::vector<std::size_t> modified_sentences;
};

struct AlignedTriple {
  MRCInstance baseline;
  MRCInstance intervention;
  MRCInstance control;
  TripleMeta meta;
};

}  // namespace samgen

#endif  // SAMGEN_MODEL_H_
