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

#include "samgen/model.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "samgen/error.h"

namespace samgen {
namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "Goal", "Foul", "Clearance", "Save", "Corner", "Substitution", "Injury"};

constexpr std::array<std::string_view, 6> kCategoryLabels = {
    "ModalNegation",    "AdverbialModification", "ImplicitNegation",
    "ExplicitNegation", "PolarityReversing",     "NegatedPolarityPreserving"};

std::string_view TargetName(Target target) {
  switch (target) {
    case Target::kActor: return "actor";
    case Target::kCoactor: return "coactor";
    case Target::kTime: return "time";
    case Target::kDistance: return "distance";
  }
  return "?";
}

std::string Ordinal(int n) {
  int tens = n % 100;
  const char *suffix = "th";
  if (tens < 11 || tens > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

std::string RankWord(int rank) {
  static constexpr std::array<std::string_view, 6> kWords = {
      "first", "second", "third", "fourth", "fifth", "sixth"};
  if (rank == -1) return "last";
  if (rank < 0 && -rank - 1 < static_cast<int>(kWords.size())) {
    return std::string(kWords[-rank - 1]) + " to last";
  }
  if (rank >= 0 && rank < static_cast<int>(kWords.size())) {
    return std::string(kWords[rank]);
  }
  return Ordinal(rank + 1);
}

std::string AnchorPhrase(const EventDescriptor &d, const Roster &roster) {
  const std::string &who = roster.Name(d.player);
  switch (d.kind) {
    case EventKind::kFoul:
      return d.role == Role::kCoactor ? who + " was fouled" : who + " committed a foul";
    case EventKind::kSubstitution:
      return d.role == Role::kCoactor ? who + " came on" : who + " was taken off";
    case EventKind::kClearance: return who + " cleared the ball";
    case EventKind::kSave: return who + " made a save";
    case EventKind::kCorner: return who + " took a corner";
    case EventKind::kInjury: return who + " got injured";
    case EventKind::kGoal: return who + " scored";
  }
  return who;
}

// Goals still in play, in report order.
std::vector<const Event *> QualifyingGoals(std::span<const Event> events,
                                           bool honor_sam) {
  std::vector<const Event *> goals;
  for (const Event &e : events) {
    if (IsGoal(e.kind) && !(honor_sam && e.modified)) goals.push_back(&e);
  }
  return goals;
}

[[noreturn]] void NoQualifying(const std::string &what) {
  throw Error(ErrorCode::kNoQualifyingEvent, what);
}

const Event *UniqueMatch(std::span<const Event> events,
                         const EventDescriptor &d, bool honor_sam,
                         bool required) {
  const Event *found = nullptr;
  for (const Event &e : events) {
    if (!d.Matches(e) || (honor_sam && e.modified)) continue;
    if (found != nullptr) NoQualifying("event descriptor is ambiguous");
    found = &e;
  }
  if (found == nullptr && required) NoQualifying("no event matches descriptor");
  return found;
}

Answer Read(const Event &e, Target target) {
  switch (target) {
    case Target::kActor:
      return {AnswerKind::kPlayer, static_cast<int>(e.actor.index), e.id};
    case Target::kCoactor:
      if (!e.coactor) NoQualifying("selected event has no second participant");
      return {AnswerKind::kPlayer, static_cast<int>(e.coactor->index), e.id};
    case Target::kTime:
      return {AnswerKind::kMinute, e.time, e.id};
    case Target::kDistance:
      if (!e.distance) NoQualifying("selected event has no distance");
      return {AnswerKind::kDistance, *e.distance, e.id};
  }
  NoQualifying("unknown target");
}

struct OracleVisitor {
  std::span<const Event> events;
  bool honor_sam;

  Answer operator()(const RetrievalOrder &q) const {
    std::vector<const Event *> goals = QualifyingGoals(events, honor_sam);
    if (q.attr == OrderAttr::kTime) {
      std::stable_sort(goals.begin(), goals.end(),
                       [](const Event *a, const Event *b) { return a->time < b->time; });
    }
    const int n = static_cast<int>(goals.size());
    const int index = q.rank >= 0 ? q.rank : n + q.rank;
    if (index < 0 || index >= n) NoQualifying("not enough goals for rank");
    return Read(*goals[index], q.target);
  }

  Answer operator()(const ArgSelect &q) const {
    std::vector<const Event *> goals = QualifyingGoals(events, honor_sam);
    if (goals.empty()) NoQualifying("no goals left");
    auto key = [&](const Event *e) {
      return q.over == Measure::kDistance ? e->distance.value_or(0) : e->time;
    };
    const Event *best = goals.front();
    for (const Event *e : goals) {
      if (q.agg == Extremum::kMax ? key(e) > key(best) : key(e) < key(best)) best = e;
    }
    return Read(*best, q.target);
  }

  Answer operator()(const Bridge &q) const {
    const Event *anchor = UniqueMatch(events, q.anchor, honor_sam, true);
    if (anchor == nullptr) NoQualifying("anchor event removed");
    const Event *chosen = nullptr;
    for (const Event *e : QualifyingGoals(events, honor_sam)) {
      if (q.direction == Direction::kBefore && e->id < anchor->id) chosen = e;
      if (q.direction == Direction::kAfter && e->id > anchor->id && chosen == nullptr) {
        chosen = e;
      }
    }
    if (chosen == nullptr) NoQualifying("no goal on the requested side of the anchor");
    return Read(*chosen, q.target);
  }

  Answer operator()(const Compare &q) const {
    std::vector<const Event *> present;
    for (const EventDescriptor &d : q.pair) {
      if (!IsGoal(d.kind)) NoQualifying("comparison over non-goal events");
      if (const Event *e = UniqueMatch(events, d, honor_sam, false)) present.push_back(e);
    }
    if (present.empty()) NoQualifying("neither compared goal remains");
    const Event *best = present.front();
    for (const Event *e : present) {
      bool better = false;
      switch (q.agg) {
        case Comparison::kEarlier: better = e->time < best->time; break;
        case Comparison::kLater: better = e->time > best->time; break;
        case Comparison::kFarther: better = e->distance > best->distance; break;
        case Comparison::kCloser: better = e->distance < best->distance; break;
      }
      if (better) best = e;
    }
    return Read(*best, q.target);
  }
};

}  // namespace

std::string_view EventKindName(EventKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<EventKind> ParseEventKind(std::string_view name) {
  for (EventKind kind : kAllEventKinds) {
    std::string_view candidate = EventKindName(kind);
    if (candidate.size() != name.size()) continue;
    bool same = std::equal(candidate.begin(), candidate.end(), name.begin(),
                           [](char a, char b) { return std::tolower(a) == std::tolower(b); });
    if (same) return kind;
  }
  return std::nullopt;
}

std::string_view SamCategoryName(SamCategory category) {
  static constexpr std::array<std::string_view, 6> kNames = {"I1", "I2", "I3",
                                                             "I4", "I5", "I6"};
  return kNames[static_cast<std::size_t>(category)];
}

std::optional<SamCategory> ParseSamCategory(std::string_view name) {
  for (SamCategory c : kAllSamCategories) {
    if (name == SamCategoryName(c) ||
        name == kCategoryLabels[static_cast<std::size_t>(c)]) {
      return c;
    }
  }
  return std::nullopt;
}

Roster::Roster(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "roster names must be distinct");
  }
}

const std::string &Roster::Name(PlayerRef player) const {
  if (player.index >= names_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "player index " + std::to_string(player.index) + " outside roster");
  }
  return names_[player.index];
}

std::optional<PlayerRef> Roster::Find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return PlayerRef{i};
  }
  return std::nullopt;
}

void ValidateReport(std::span<const Event> events) {
  auto fail = [](const Event &e, const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument,
                "event " + std::to_string(e.id) + ": " + what);
  };
  std::set<int> distances;
  const Event *previous = nullptr;
  for (const Event &e : events) {
    if (IsGoal(e.kind)) {
      if (!e.distance) fail(e, "goal without distance");
      if (*e.distance < kMinDistance || *e.distance > kMaxDistance) {
        fail(e, "distance out of range");
      }
      if (!distances.insert(*e.distance).second) fail(e, "duplicate goal distance");
    } else if (e.distance) {
      fail(e, "only goals carry a distance");
    }
    if (e.time < kMinMinute || e.time > kMaxMinute) fail(e, "time out of range");
    if (previous != nullptr && (e.time <= previous->time || e.id <= previous->id)) {
      fail(e, "times must strictly increase with id");
    }
    if (e.modified == e.sam.empty()) fail(e, "modified flag disagrees with SAM list");
    if (e.coactor && *e.coactor == e.actor) fail(e, "actor and coactor coincide");
    previous = &e;
  }
}

bool EventDescriptor::Matches(const Event &event) const {
  if (event.kind != kind) return false;
  if (role == Role::kActor) return event.actor == player;
  return event.coactor && *event.coactor == player;
}

Role AnchorRole(EventKind kind) {
  return kind == EventKind::kFoul || kind == EventKind::kSubstitution
             ? Role::kCoactor
             : Role::kActor;
}

Target QuestionTarget(const QuestionForm &form) {
  return std::visit([](const auto &q) { return q.target; }, form);
}

std::string QuestionTypeKey(const QuestionForm &form) {
  std::ostringstream out;
  if (const auto *q = std::get_if<RetrievalOrder>(&form)) {
    out << "order:" << (q->attr == OrderAttr::kTime ? "time" : "position") << ':'
        << q->rank;
  } else if (const auto *q = std::get_if<ArgSelect>(&form)) {
    out << "argselect:" << (q->agg == Extremum::kMax ? "max" : "min") << ':'
        << (q->over == Measure::kDistance ? "distance" : "time");
  } else if (const auto *q = std::get_if<Bridge>(&form)) {
    out << "bridge:" << (q->direction == Direction::kBefore ? "before" : "after");
  } else if (const auto *q = std::get_if<Compare>(&form)) {
    static constexpr std::array<std::string_view, 4> kAgg = {"earlier", "later",
                                                             "farther", "closer"};
    out << "compare:" << kAgg[static_cast<std::size_t>(q->agg)];
  }
  out << ':' << TargetName(QuestionTarget(form));
  return out.str();
}

std::string RealiseQuestion(const QuestionForm &form, const Roster &roster) {
  auto goal_question = [](Target target, const std::string &goal) {
    switch (target) {
      case Target::kActor: return "Who scored " + goal + "?";
      case Target::kCoactor: return "Who assisted " + goal + "?";
      case Target::kTime: return "When was " + goal + " scored?";
      case Target::kDistance: return "From how far was " + goal + " scored?";
    }
    return goal;
  };
  if (const auto *q = std::get_if<RetrievalOrder>(&form)) {
    return goal_question(q->target, "the " + RankWord(q->rank) + " goal");
  }
  if (const auto *q = std::get_if<ArgSelect>(&form)) {
    std::string adjective;
    if (q->over == Measure::kDistance) {
      adjective = q->agg == Extremum::kMax ? "farthest" : "closest";
    } else {
      adjective = q->agg == Extremum::kMax ? "latest" : "earliest";
    }
    return goal_question(q->target, "the " + adjective + " goal");
  }
  if (const auto *q = std::get_if<Bridge>(&form)) {
    std::string goal = q->direction == Direction::kBefore ? "the last goal before "
                                                          : "the first goal after ";
    goal += AnchorPhrase(q->anchor, roster);
    if (q->target == Target::kTime || q->target == Target::kDistance) {
      std::string lead = q->target == Target::kTime ? "When was" : "From how far was";
      return lead + " the goal scored that came right " +
             (q->direction == Direction::kBefore ? "before " : "after ") +
             AnchorPhrase(q->anchor, roster) + "?";
    }
    return goal_question(q->target, goal);
  }
  const auto &q = std::get<Compare>(form);
  const std::string &a = roster.Name(q.pair[0].player);
  const std::string &b = roster.Name(q.pair[1].player);
  if (q.target == Target::kCoactor) {
    static constexpr std::array<std::string_view, 4> kAdj = {"earlier", "later",
                                                             "farther", "closer"};
    return "Who assisted the " + std::string(kAdj[static_cast<std::size_t>(q.agg)]) +
           " goal, the one by " + a + " or the one by " + b + "?";
  }
  static constexpr std::array<std::string_view, 4> kHow = {
      "earlier", "later", "from farther away", "from closer in"};
  std::string how(kHow[static_cast<std::size_t>(q.agg)]);
  if (q.target == Target::kActor) return "Who scored " + how + ", " + a + " or " + b + "?";
  return goal_question(q.target, "the goal scored " + how + " by " + a + " or " + b);
}

std::string DistanceText(int metres) { return std::to_string(metres) + " metres"; }

std::string MinuteText(int minute) { return Ordinal(minute) + " minute"; }

std::string AnswerText(const Answer &answer, const Roster &roster) {
  switch (answer.kind) {
    case AnswerKind::kPlayer:
      return roster.Name(PlayerRef{static_cast<std::size_t>(answer.value)});
    case AnswerKind::kMinute: return MinuteText(answer.value);
    case AnswerKind::kDistance: return DistanceText(answer.value);
  }
  return {};
}

Answer OracleAnswer(const QuestionForm &question, std::span<const Event> events,
                    bool honor_sam) {
  if (events.empty()) NoQualifying("empty report");
  return std::visit(OracleVisitor{events, honor_sam}, question);
}

std::vector<Event> WithoutModified(std::span<const Event> events) {
  std::vector<Event> kept;
  for (const Event &e : events) {
    if (!e.modified) kept.push_back(e);
  }
  return kept;
}

bool SpanMatches(const MRCInstance &instance) {
  return instance.answer_start <= instance.context.size() &&
         instance.context.compare(instance.answer_start, instance.answer.size(),
                                  instance.answer) == 0 &&
         instance.answer_start + instance.answer.size() <= instance.context.size();
}

}  // namespace samgen
