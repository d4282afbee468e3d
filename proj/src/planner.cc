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

#include "samgen/planner.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "samgen/error.h"

namespace samgen {
namespace {

constexpr int kPlanAttempts = 1000;
constexpr int kResampleAttempts = 20;
constexpr double kReuseProbability = 0.1;

[[noreturn]] void Unsatisfiable(const std::string &what) {
  throw Error(ErrorCode::kUnsatisfiablePlan, what);
}

// Minimum goal count for n_sam modifications.
int RequiredGoals(const QuestionForm &question, int n_sam) {
  if (const auto *q = std::get_if<RetrievalOrder>(&question)) {
    return q->rank >= 0 ? q->rank + n_sam + 1 : -q->rank + n_sam;
  }
  return n_sam + 1;
}

std::vector<std::size_t> GoalPositions(std::span<const EventKind> kinds) {
  std::vector<std::size_t> goals;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (IsGoal(kinds[i])) goals.push_back(i);
  }
  return goals;
}

// Non-goal positions that can anchor a bridge question.
std::vector<std::size_t> BridgeAnchors(const Bridge &q, std::span<const EventKind> kinds,
                                       int n_sam) {
  std::vector<std::size_t> anchors;
  for (std::size_t p = 0; p < kinds.size(); ++p) {
    if (IsGoal(kinds[p])) continue;
    int before = 0;
    int after = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (!IsGoal(kinds[i])) continue;
      (i < p ? before : after) += 1;
    }
    int side = q.direction == Direction::kBefore ? before : after;
    if (side >= n_sam + 1) anchors.push_back(p);
  }
  return anchors;
}

std::vector<std::size_t> SampleSubset(const std::vector<std::size_t> &items, std::size_t k,
                                      Rng &rng) {
  std::vector<std::size_t> pool = items;
  rng.Shuffle(pool);
  pool.resize(std::min(k, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Adds "distance(a) > distance(b)" to whichever of the two slots is later.
void RequireFarther(ContentPlan &plan, std::size_t a, std::size_t b) {
  if (a > b) {
    plan.slots[a].relations.push_back({RelationOp::kDistanceGreater, b});
  } else {
    plan.slots[b].relations.push_back({RelationOp::kDistanceLess, a});
  }
}

// Random linear extension of the distance order over goal slots; returns
// slot indices from smallest to largest distance, or nullopt on a cycle.
std::optional<std::vector<std::size_t>> DistanceOrder(const ContentPlan &plan, Rng *rng) {
  const std::size_t n = plan.slots.size();
  std::vector<std::vector<std::size_t>> next(n);
  std::vector<int> indegree(n, 0);
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    if (plan.slots[i].kind.cls == KindClass::kGoal) nodes.push_back(i);
    for (const Relation &r : plan.slots[i].relations) {
      // Edge u -> v means distance(u) < distance(v).
      std::size_t u = r.op == RelationOp::kDistanceGreater ? r.slot : i;
      std::size_t v = r.op == RelationOp::kDistanceGreater ? i : r.slot;
      next[u].push_back(v);
      ++indegree[v];
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t i : nodes) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t pick = rng != nullptr ? rng->Below(ready.size()) : 0;
    std::size_t node = ready[pick];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
    order.push_back(node);
    for (std::size_t v : next[node]) {
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  if (order.size() != nodes.size()) return std::nullopt;
  return order;
}

EventKind SampleKind(const KindRequirement &req, Rng &rng) {
  if (req.exact) return *req.exact;
  switch (req.cls) {
    case KindClass::kGoal: return EventKind::kGoal;
    case KindClass::kOther: return rng.Pick(std::span<const EventKind>(kOtherEventKinds));
    case KindClass::kAny: return rng.Pick(std::span<const EventKind>(kAllEventKinds));
  }
  return EventKind::kGoal;
}

double CoactorProbability(EventKind kind) {
  switch (kind) {
    case EventKind::kFoul:
    case EventKind::kSubstitution: return 1.0;
    default: return 0.6;
  }
}

class PlayerPicker {
 public:
  PlayerPicker(const Roster &roster, Rng &rng) : rng_(rng), order_(roster.size()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    rng_.Shuffle(order_);
  }

  PlayerRef Next(std::optional<PlayerRef> exclude) {
    auto allowed = [&](std::size_t p) { return !exclude || exclude->index != p; };
    if (!used_.empty() && rng_.Chance(kReuseProbability)) {
      std::size_t p = used_[rng_.Below(used_.size())];
      if (allowed(p)) return PlayerRef{p};
    }
    while (cursor_ < order_.size()) {
      std::size_t p = order_[cursor_++];
      if (allowed(p)) {
        used_.push_back(p);
        return PlayerRef{p};
      }
    }
    for (;;) {
      std::size_t p = order_[rng_.Below(order_.size())];
      if (allowed(p)) return PlayerRef{p};
    }
  }

 private:
  Rng &rng_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> used_;
  std::size_t cursor_ = 0;
};

int CountMatches(const EventDescriptor &d, std::span<const Event> events) {
  return static_cast<int>(
      std::count_if(events.begin(), events.end(), [&](const Event &e) { return d.Matches(e); }));
}

// Binds descriptor players from the instantiated events.
std::optional<QuestionForm> BindQuestion(const ContentPlan &plan,
                                         std::span<const Event> events) {
  QuestionForm form = plan.question;
  auto descriptor_for = [&](std::size_t slot, bool goal_scorer) {
    const Event &e = events[slot];
    EventDescriptor d;
    d.kind = e.kind;
    d.role = goal_scorer ? Role::kActor : AnchorRole(e.kind);
    d.player = d.role == Role::kActor ? e.actor : e.coactor.value_or(e.actor);
    return d;
  };
  if (auto *q = std::get_if<Bridge>(&form)) {
    q->anchor = descriptor_for(plan.descriptor_slots.at(0), false);
    if (q->anchor.role == Role::kCoactor && !events[plan.descriptor_slots[0]].coactor) {
      return std::nullopt;
    }
    if (CountMatches(q->anchor, events) != 1) return std::nullopt;
  } else if (auto *q = std::get_if<Compare>(&form)) {
    for (std::size_t k = 0; k < 2; ++k) {
      q->pair[k] = descriptor_for(plan.descriptor_slots.at(k), true);
      if (CountMatches(q->pair[k], events) != 1) return std::nullopt;
    }
  }
  return form;
}

std::string SequenceKey(std::span<const EventKind> kinds) {
  std::string key;
  for (EventKind k : kinds) key += static_cast<char>('0' + static_cast<int>(k));
  return key;
}

}  // namespace

bool KindRequirement::Accepts(EventKind kind) const {
  if (exact && *exact != kind) return false;
  switch (cls) {
    case KindClass::kGoal: return IsGoal(kind);
    case KindClass::kOther: return !IsGoal(kind);
    case KindClass::kAny: return true;
  }
  return false;
}

std::vector<EventKind> ContentPlan::KindSequence() const {
  std::vector<EventKind> kinds;
  for (const EventConstraint &slot : slots) {
    if (slot.kind.exact) {
      kinds.push_back(*slot.kind.exact);
    } else if (slot.kind.cls == KindClass::kGoal) {
      kinds.push_back(EventKind::kGoal);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "plan slot leaves its event kind open");
    }
  }
  return kinds;
}

const std::vector<QuestionForm> &QuestionCatalog() {
  static const std::vector<QuestionForm> catalog = {
      RetrievalOrder{OrderAttr::kTime, 0, Target::kActor},
      RetrievalOrder{OrderAttr::kTime, -1, Target::kActor},
      RetrievalOrder{OrderAttr::kTime, 1, Target::kTime},
      RetrievalOrder{OrderAttr::kTime, -2, Target::kTime},
      RetrievalOrder{OrderAttr::kTime, 0, Target::kDistance},
      RetrievalOrder{OrderAttr::kTime, 0, Target::kCoactor},
      ArgSelect{Extremum::kMax, Measure::kDistance, Target::kActor},
      ArgSelect{Extremum::kMin, Measure::kDistance, Target::kActor},
      ArgSelect{Extremum::kMax, Measure::kDistance, Target::kDistance},
      ArgSelect{Extremum::kMin, Measure::kDistance, Target::kTime},
      Bridge{Direction::kBefore, {}, Target::kActor},
      Bridge{Direction::kAfter, {}, Target::kActor},
      Bridge{Direction::kBefore, {}, Target::kTime},
      Bridge{Direction::kAfter, {}, Target::kDistance},
      Compare{Comparison::kEarlier, {}, Target::kActor},
      Compare{Comparison::kFarther, {}, Target::kActor},
      Compare{Comparison::kCloser, {}, Target::kActor},
      Compare{Comparison::kLater, {}, Target::kCoactor},
  };
  return catalog;
}

int MinEvents(const QuestionForm &question) {
  return std::holds_alternative<Bridge>(question) ? 3 : 2;
}

bool KindSequenceFeasible(const QuestionForm &question, std::span<const EventKind> kinds,
                          int n_sam) {
  if (n_sam < 1 || n_sam > 3) return false;
  if (static_cast<int>(kinds.size()) < MinEvents(question)) return false;
  if (const auto *q = std::get_if<Bridge>(&question)) {
    return !BridgeAnchors(*q, kinds, n_sam).empty();
  }
  return static_cast<int>(GoalPositions(kinds).size()) >= RequiredGoals(question, n_sam);
}

std::uint64_t KindSequenceCapacity(const QuestionForm &question, int n_events, int n_sam) {
  if (n_events < 1 || n_events > 20) {
    throw Error(ErrorCode::kInvalidArgument, "n_events out of range");
  }
  // Feasibility only depends on where the goals are; every other position
  // can hold any of the non-goal kinds.
  std::uint64_t total = 0;
  std::vector<EventKind> kinds(static_cast<std::size_t>(n_events));
  for (std::uint32_t mask = 0; mask < (1u << n_events); ++mask) {
    int others = 0;
    for (int i = 0; i < n_events; ++i) {
      bool goal = (mask >> i) & 1u;
      kinds[static_cast<std::size_t>(i)] = goal ? EventKind::kGoal : EventKind::kFoul;
      others += goal ? 0 : 1;
    }
    if (!KindSequenceFeasible(question, kinds, n_sam)) continue;
    std::uint64_t weight = 1;
    for (int i = 0; i < others; ++i) weight *= kOtherEventKinds.size();
    total += weight;
  }
  return total;
}

int MaxFeasibleSam(const QuestionForm &question, int n_events) {
  for (int s = 3; s >= 1; --s) {
    if (KindSequenceCapacity(question, n_events, s) > 0) return s;
  }
  return 0;
}

ContentPlan BuildPlan(const QuestionForm &question, int n_events, int n_sam, Rng &rng) {
  if (n_sam < 1 || n_sam > 3) {
    Unsatisfiable("n_sam must be between 1 and 3, got " + std::to_string(n_sam));
  }
  if (n_events < MinEvents(question)) {
    Unsatisfiable(QuestionTypeKey(question) + " needs at least " +
                  std::to_string(MinEvents(question)) + " events");
  }
  const int needed = RequiredGoals(question, n_sam);
  const int max_goals = std::holds_alternative<Bridge>(question) ? n_events - 1 : n_events;
  if (needed > max_goals) {
    Unsatisfiable(std::to_string(n_sam) + " modifications need more goals than " +
                  std::to_string(n_events) + " events allow");
  }
  for (int attempt = 0; attempt < kPlanAttempts; ++attempt) {
    const int goals = rng.Between(needed, max_goals);
    std::vector<EventKind> kinds(static_cast<std::size_t>(n_events));
    for (EventKind &k : kinds) k = rng.Pick(std::span<const EventKind>(kOtherEventKinds));
    for (int p : rng.Distinct(0, n_events - 1, static_cast<std::size_t>(goals))) {
      kinds[static_cast<std::size_t>(p)] = EventKind::kGoal;
    }
    if (KindSequenceFeasible(question, kinds, n_sam)) {
      return BuildPlanForKinds(question, kinds, n_sam, rng);
    }
  }
  Unsatisfiable("no feasible event-kind sequence found for " + QuestionTypeKey(question));
}

ContentPlan BuildPlanForKinds(const QuestionForm &question, std::span<const EventKind> kinds,
                              int n_sam, Rng &rng) {
  if (!KindSequenceFeasible(question, kinds, n_sam)) {
    Unsatisfiable("event-kind sequence cannot carry " + std::to_string(n_sam) +
                  " modifications for " + QuestionTypeKey(question));
  }
  ContentPlan plan;
  plan.question = question;
  for (EventKind kind : kinds) {
    EventConstraint slot;
    slot.kind = {IsGoal(kind) ? KindClass::kGoal : KindClass::kOther, kind};
    plan.slots.push_back(slot);
  }
  const std::vector<std::size_t> goals = GoalPositions(kinds);
  const int g = static_cast<int>(goals.size());
  const bool wants_coactor = QuestionTarget(question) == Target::kCoactor;
  std::vector<std::size_t> modified;
  std::vector<std::size_t> answer_slots;  // old and new answer events

  if (const auto *q = std::get_if<RetrievalOrder>(&question)) {
    if (q->rank >= 0) {
      for (int k = 0; k < n_sam; ++k) modified.push_back(goals[q->rank + k]);
      answer_slots = {goals[q->rank], goals[q->rank + n_sam]};
    } else {
      const int index = g + q->rank;
      for (int k = 0; k < n_sam; ++k) modified.push_back(goals[index - k]);
      answer_slots = {goals[index], goals[index - n_sam]};
    }
  } else if (const auto *q = std::get_if<ArgSelect>(&question)) {
    if (q->over == Measure::kDistance) {
      modified = SampleSubset(goals, static_cast<std::size_t>(n_sam), rng);
      for (std::size_t m : modified) {
        for (std::size_t u : goals) {
          if (std::find(modified.begin(), modified.end(), u) != modified.end()) continue;
          if (q->agg == Extremum::kMax) {
            RequireFarther(plan, m, u);
          } else {
            RequireFarther(plan, u, m);
          }
        }
      }
      answer_slots = goals;
    } else {
      for (int k = 0; k < n_sam; ++k) {
        modified.push_back(q->agg == Extremum::kMax ? goals[g - 1 - k] : goals[k]);
      }
      answer_slots = goals;
    }
  } else if (const auto *q = std::get_if<Bridge>(&question)) {
    std::vector<std::size_t> anchors = BridgeAnchors(*q, kinds, n_sam);
    const std::size_t anchor = rng.Pick(anchors);
    std::vector<std::size_t> side;
    for (std::size_t p : goals) {
      if (q->direction == Direction::kBefore ? p < anchor : p > anchor) side.push_back(p);
    }
    if (q->direction == Direction::kBefore) std::reverse(side.begin(), side.end());
    for (int k = 0; k < n_sam; ++k) modified.push_back(side[static_cast<std::size_t>(k)]);
    answer_slots = {side[0], side[static_cast<std::size_t>(n_sam)]};
    plan.descriptor_slots = {anchor};
  } else {
    const auto &cmp = std::get<Compare>(question);
    std::vector<std::size_t> pair = SampleSubset(goals, 2, rng);
    std::size_t winner = 0;
    switch (cmp.agg) {
      case Comparison::kEarlier: winner = pair[0]; break;
      case Comparison::kLater: winner = pair[1]; break;
      case Comparison::kFarther:
      case Comparison::kCloser: winner = pair[rng.Below(2)]; break;
    }
    const std::size_t loser = winner == pair[0] ? pair[1] : pair[0];
    if (cmp.agg == Comparison::kFarther) RequireFarther(plan, winner, loser);
    if (cmp.agg == Comparison::kCloser) RequireFarther(plan, loser, winner);
    modified.push_back(winner);
    std::vector<std::size_t> rest;
    for (std::size_t p : goals) {
      if (p != pair[0] && p != pair[1]) rest.push_back(p);
    }
    for (std::size_t p : SampleSubset(rest, static_cast<std::size_t>(n_sam - 1), rng)) {
      modified.push_back(p);
    }
    if (rng.Chance(0.5)) std::swap(pair[0], pair[1]);
    plan.descriptor_slots = pair;
    answer_slots = pair;
  }

  std::sort(modified.begin(), modified.end());
  for (std::size_t m : modified) plan.slots[m].modified = true;
  plan.modified_slots = modified;
  if (wants_coactor) {
    for (std::size_t s : answer_slots) plan.slots[s].needs_coactor = true;
  }
  ValidatePlan(plan);
  return plan;
}

void ValidatePlan(const ContentPlan &plan) {
  if (plan.slots.empty()) Unsatisfiable("plan has no slots");
  std::vector<std::size_t> flagged;
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    const EventConstraint &slot = plan.slots[i];
    if (slot.modified) {
      flagged.push_back(i);
      if (slot.kind.cls != KindClass::kGoal) Unsatisfiable("only goals can be modified");
    }
    if (slot.kind.exact && !slot.kind.Accepts(*slot.kind.exact)) {
      Unsatisfiable("slot " + std::to_string(i) + " has a contradictory kind");
    }
    for (const Relation &r : slot.relations) {
      if (r.slot >= i) {
        Unsatisfiable("slot " + std::to_string(i) + " relates to a later slot");
      }
      if (slot.kind.cls != KindClass::kGoal ||
          plan.slots[r.slot].kind.cls != KindClass::kGoal) {
        Unsatisfiable("distance relations only hold between goals");
      }
    }
  }
  if (flagged.empty()) Unsatisfiable("no slot is modified");
  if (flagged.size() > 3) Unsatisfiable("at most three slots can be modified");
  if (flagged != plan.modified_slots) Unsatisfiable("modified slot list is inconsistent");
  for (std::size_t d : plan.descriptor_slots) {
    if (d >= plan.slots.size()) Unsatisfiable("descriptor slot out of range");
  }
  // Earliest strictly increasing minutes respecting every window.
  int t = kMinMinute - 1;
  for (const EventConstraint &slot : plan.slots) {
    int lo = slot.time_window ? slot.time_window->first : kMinMinute;
    int hi = slot.time_window ? slot.time_window->second : kMaxMinute;
    t = std::max(t + 1, lo);
    if (t > std::min(hi, kMaxMinute)) Unsatisfiable("time windows cannot be met");
  }
  std::size_t goals = std::count_if(plan.slots.begin(), plan.slots.end(), [](const auto &s) {
    return s.kind.cls == KindClass::kGoal;
  });
  if (goals > static_cast<std::size_t>(kMaxDistance - kMinDistance + 1)) {
    Unsatisfiable("too many goals for distinct distances");
  }
  if (!DistanceOrder(plan, nullptr)) Unsatisfiable("distance relations are cyclic");
}

Instantiation Instantiate(const ContentPlan &plan, const Roster &roster, Rng &rng,
                          int max_attempts) {
  ValidatePlan(plan);
  if (roster.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "roster needs at least two players");
  }
  const std::size_t n = plan.slots.size();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> times = rng.Distinct(kMinMinute, kMaxMinute, n);
    std::sort(times.begin(), times.end());
    bool windows_ok = true;
    for (std::size_t i = 0; i < n && windows_ok; ++i) {
      if (const auto &w = plan.slots[i].time_window) {
        windows_ok = times[i] >= w->first && times[i] <= w->second;
      }
    }
    if (!windows_ok) continue;

    std::vector<Event> events(n);
    PlayerPicker players(roster, rng);
    for (std::size_t i = 0; i < n; ++i) {
      Event &e = events[i];
      const EventConstraint &slot = plan.slots[i];
      e.id = static_cast<int>(i);
      e.kind = SampleKind(slot.kind, rng);
      e.time = times[i];
      e.modified = slot.modified;
      e.actor = players.Next(std::nullopt);
      if (slot.needs_coactor || rng.Chance(CoactorProbability(e.kind))) {
        e.coactor = players.Next(e.actor);
      }
    }
    std::vector<std::size_t> order = *DistanceOrder(plan, &rng);
    std::vector<int> distances =
        rng.Distinct(kMinDistance, kMaxDistance, order.size());
    std::sort(distances.begin(), distances.end());
    for (std::size_t k = 0; k < order.size(); ++k) events[order[k]].distance = distances[k];

    std::optional<QuestionForm> form = BindQuestion(plan, events);
    if (!form || !SatisfiesPlan(plan, events)) continue;
    try {
      Answer before = OracleAnswer(*form, events, false);
      Answer after = OracleAnswer(*form, events, true);
      if (before == after) continue;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kNoQualifyingEvent) throw;
      continue;
    }
    Instantiation out;
    out.events = std::move(events);
    out.question.form = *form;
    out.question.surface = RealiseQuestion(*form, roster);
    return out;
  }
  throw Error(ErrorCode::kExhaustedRetries,
              "could not instantiate plan for " + QuestionTypeKey(plan.question) + " in " +
                  std::to_string(max_attempts) + " attempts");
}

bool SatisfiesPlan(const ContentPlan &plan, std::span<const Event> events) {
  if (events.size() != plan.slots.size()) return false;
  std::set<int> distances;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event &e = events[i];
    const EventConstraint &slot = plan.slots[i];
    if (!slot.kind.Accepts(e.kind)) return false;
    if (e.modified != slot.modified) return false;
    if (slot.needs_coactor && !e.coactor) return false;
    if (i > 0 && e.time <= events[i - 1].time) return false;
    if (e.time < kMinMinute || e.time > kMaxMinute) return false;
    if (slot.time_window &&
        (e.time < slot.time_window->first || e.time > slot.time_window->second)) {
      return false;
    }
    if (IsGoal(e.kind)) {
      if (!e.distance || *e.distance < kMinDistance || *e.distance > kMaxDistance) return false;
      if (!distances.insert(*e.distance).second) return false;
    }
    for (const Relation &r : slot.relations) {
      const Event &other = events[r.slot];
      if (!e.distance || !other.distance) return false;
      bool holds = r.op == RelationOp::kDistanceGreater ? *e.distance > *other.distance
                                                        : *e.distance < *other.distance;
      if (!holds) return false;
    }
  }
  return true;
}

std::vector<ContentPlan> UniqueTypeOrders(std::vector<ContentPlan> plans, Rng &rng) {
  // Capacity per question type and report length.
  std::map<std::pair<std::string, std::size_t>, std::uint64_t> requested;
  std::map<std::pair<std::string, std::size_t>, const QuestionForm *> forms;
  for (const ContentPlan &p : plans) {
    auto key = std::make_pair(QuestionTypeKey(p.question), p.slots.size());
    ++requested[key];
    forms[key] = &p.question;
  }
  std::uint64_t achievable = 0;
  bool exceeded = false;
  for (const auto &[key, count] : requested) {
    std::uint64_t capacity =
        KindSequenceCapacity(*forms[key], static_cast<int>(key.second), 1);
    achievable += std::min(count, capacity);
    exceeded = exceeded || count > capacity;
  }
  if (exceeded) throw CapacityExceeded(plans.size(), achievable);

  std::map<std::pair<std::string, std::size_t>, std::set<std::string>> used;
  for (ContentPlan &plan : plans) {
    const int n = static_cast<int>(plan.slots.size());
    auto key = std::make_pair(QuestionTypeKey(plan.question), plan.slots.size());
    std::set<std::string> &seen = used[key];
    if (seen.insert(SequenceKey(plan.KindSequence())).second) continue;

    bool placed = false;
    for (int attempt = 0; attempt < kResampleAttempts && !placed; ++attempt) {
      ContentPlan candidate = BuildPlan(plan.question, n, plan.n_sam(), rng);
      if (seen.insert(SequenceKey(candidate.KindSequence())).second) {
        plan = std::move(candidate);
        placed = true;
      }
    }
    // Exhaustive fallback: pick uniformly among the unused feasible
    // sequences, lowering n_sam only when none is left at this level.
    for (int n_sam = plan.n_sam(); n_sam >= 1 && !placed; --n_sam) {
      std::vector<std::vector<EventKind>> free;
      std::vector<EventKind> kinds(static_cast<std::size_t>(n), EventKind::kGoal);
      std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
      for (;;) {
        for (std::size_t i = 0; i < digits.size(); ++i) kinds[i] = kAllEventKinds[digits[i]];
        if (KindSequenceFeasible(plan.question, kinds, n_sam) &&
            seen.count(SequenceKey(kinds)) == 0) {
          free.push_back(kinds);
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == kAllEventKinds.size()) digits[i++] = 0;
        if (i == digits.size()) break;
      }
      if (free.empty()) continue;
      const std::vector<EventKind> &chosen = rng.Pick(free);
      plan = BuildPlanForKinds(plan.question, chosen, n_sam, rng);
      seen.insert(SequenceKey(chosen));
      placed = true;
    }
    if (!placed) throw CapacityExceeded(plans.size(), achievable);
  }
  return plans;
}

}  // namespace samgen
