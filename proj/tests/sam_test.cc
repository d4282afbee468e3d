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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "samgen/error.h"
#include "samgen/resources.h"
#include "samgen/text.h"

namespace samgen {
namespace {

constexpr const char *kCurlGrammar = R"(
RULE Con@first -> After the kickoff
RULE Con@later -> Then
RULE V.Goal -> [curl|curled|curling|in] a goal
RULE PP.Distance -> from #Distance away
RULE PP.Time -> in the #Time
TEMPLATE curl Goal: %Con #Actor @SAM $V.Goal $PP.Distance $PP.Time .
)";

const Roster kRoster({"Naomi Daniel", "Amanda Collins"});

struct TwoGoal {
  Grammar grammar;
  std::vector<Event> events;
  RealisedReport baseline;
};

TwoGoal MakeTwoGoal() {
  TwoGoal f;
  f.grammar.Parse(kCurlGrammar);
  Event first;
  first.id = 0;
  first.actor = PlayerRef{0};
  first.distance = 26;
  first.time = 4;
  first.modified = true;
  first.sam = {SamCategory::kAdverbialModification};
  Event second;
  second.id = 1;
  second.actor = PlayerRef{1};
  second.distance = 18;
  second.time = 37;
  f.events = {first, second};
  std::vector<const Template *> templates(2, &f.grammar.FindTemplate("curl"));
  Rng rng(0);
  f.baseline = RealiseReport(f.events, templates, f.grammar, kRoster, rng);
  return f;
}

const SamEntry kAlmost{SamCategory::kAdverbialModification, "almost", VerbForm::kPastTense};

TEST(MakeInterventionTest, TwoGoalExample) {
  TwoGoal f = MakeTwoGoal();
  RealisedReport i = MakeIntervention(f.baseline, f.events, {{0, kAlmost}});
  EXPECT_EQ(i.text,
            "After the kickoff Naomi Daniel almost curled in a goal from 26 metres away in the "
            "4th minute. Then Amanda Collins curled in a goal from 18 metres away in the 37th "
            "minute.");
  EXPECT_EQ(i.sentences[1].text, f.baseline.sentences[1].text);
  auto time = i.AttrSpan(1, Attr::kTime);
  EXPECT_EQ(i.text.substr(time->begin, time->length), "37th minute");
}

TEST(MakeInterventionTest, RejectsBadEntrySets) {
  TwoGoal f = MakeTwoGoal();
  EXPECT_THROW(MakeIntervention(f.baseline, f.events, {}), Error);
  EXPECT_THROW(MakeIntervention(f.baseline, f.events, {{1, kAlmost}}), Error);
  EXPECT_THROW(MakeIntervention(f.baseline, f.events, {{0, kAlmost}, {1, kAlmost}}), Error);
}

TEST(MakeControlTest, TwoGoalExample) {
  TwoGoal f = MakeTwoGoal();
  RealisedReport i = MakeIntervention(f.baseline, f.events, {{0, kAlmost}});
  std::vector<std::size_t> drop = {0};
  RealisedReport c = MakeControl(i, drop);
  EXPECT_EQ(c.text, "Then Amanda Collins curled in a goal from 18 metres away in the 37th minute.");
  auto actor = c.AttrSpan(0, Attr::kActor);
  EXPECT_EQ(actor->begin, 5u);
}

TEST(MakeControlTest, IdentityAndAllRemoved) {
  TwoGoal f = MakeTwoGoal();
  EXPECT_EQ(MakeControl(f.baseline, std::vector<std::size_t>{}).text, f.baseline.text);
  try {
    MakeControl(f.baseline, std::vector<std::size_t>{0, 1});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllSentencesRemoved);
  }
  EXPECT_THROW(MakeControl(f.baseline, std::vector<std::size_t>{2}), Error);
}

TEST(SampleSamEntryTest, EmptyLexiconFails) {
  Rng rng(0);
  EXPECT_THROW(SampleSamEntry(SamLexicon(), rng), Error);
}

TEST(SampleSamEntryTest, CoversEveryCategory) {
  const Resources res = LoadResources();
  Rng rng(11);
  std::set<SamCategory> seen;
  for (int i = 0; i < 600; ++i) seen.insert(SampleSamEntry(res.lexicon, rng).category);
  EXPECT_EQ(seen.size(), kAllSamCategories.size());
}

std::vector<std::string> Words(const std::string &s) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(s)) out.emplace_back(t.text);
  return out;
}

TEST(SamPropertyTest, EditBoundControlAndSpans) {
  const Resources res = LoadResources();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 22; ++i) {
    names.push_back(res.names.given()[i] + " " + res.names.family()[i]);
  }
  const Roster roster(names);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = rng.Between(3, 9);
    std::vector<int> times = rng.Distinct(kMinMinute, kMaxMinute, static_cast<std::size_t>(n));
    std::sort(times.begin(), times.end());
    std::vector<Event> events;
    for (int k = 0; k < n; ++k) {
      Event e;
      e.id = k;
      e.kind = k % 2 == 0 ? EventKind::kGoal : EventKind::kFoul;
      e.actor = PlayerRef{rng.Below(11)};
      e.coactor = PlayerRef{11 + rng.Below(11)};
      e.time = times[static_cast<std::size_t>(k)];
      if (e.kind == EventKind::kGoal) e.distance = rng.Between(kMinDistance, kMaxDistance);
      events.push_back(e);
    }
    const int goals = (n + 1) / 2;
    const int n_sam = rng.Between(1, std::min(3, goals - 1 > 0 ? goals - 1 : 1));
    std::map<int, SamEntry> entries;
    std::vector<std::size_t> modified;
    for (int k : rng.Distinct(0, goals - 1, static_cast<std::size_t>(n_sam))) {
      Event &e = events[static_cast<std::size_t>(2 * k)];
      SamEntry entry = SampleSamEntry(res.lexicon, rng);
      e.modified = true;
      e.sam = {entry.category};
      entries[e.id] = entry;
      modified.push_back(static_cast<std::size_t>(2 * k));
    }
    RealisedReport b = RealiseReport(events, res.grammar, SplitSelector::kFull, roster, rng);
    RealisedReport i = MakeIntervention(b, events, entries);
    RealisedReport c = MakeControl(i, modified);

    std::size_t changed = 0;
    for (std::size_t s = 0; s < b.sentences.size(); ++s) {
      const std::vector<std::string> before = Words(b.sentences[s].text);
      const std::vector<std::string> after = Words(i.sentences[s].text);
      if (before == after) continue;
      ++changed;
      auto it = entries.find(events[s].id);
      ASSERT_NE(it, entries.end());
      std::size_t prefix = 0;
      while (prefix < before.size() && prefix < after.size() && before[prefix] == after[prefix]) {
        ++prefix;
      }
      std::size_t suffix = 0;
      while (suffix < before.size() - prefix && suffix < after.size() - prefix &&
             before[before.size() - 1 - suffix] == after[after.size() - 1 - suffix]) {
        ++suffix;
      }
      const std::size_t removed = before.size() - prefix - suffix;
      const std::size_t added = after.size() - prefix - suffix;
      const std::size_t surface_words = Words(it->second.surface).size();
      EXPECT_LE(removed, 1u) << b.sentences[s].text << " | " << i.sentences[s].text;
      EXPECT_GE(added, surface_words);
      EXPECT_LE(added, surface_words + removed);
    }
    EXPECT_EQ(changed, entries.size());

    EXPECT_EQ(c.sentences.size(), b.sentences.size() - modified.size());
    std::size_t next = 0;
    for (std::size_t s = 0; s < b.sentences.size(); ++s) {
      if (std::find(modified.begin(), modified.end(), s) != modified.end()) continue;
      EXPECT_EQ(c.sentences[next++].text, b.sentences[s].text);
    }
    const std::vector<std::string> control_tokens = NormalizedTokens(c.text);
    for (const SamEntry &entry : res.lexicon.entries()) {
      EXPECT_TRUE(FindTokenSequence(control_tokens, NormalizedTokens(entry.surface)).empty());
    }
    for (const RealisedReport *r : {&i, &c}) {
      for (std::size_t s = 0; s < r->sentences.size(); ++s) {
        auto span = r->AttrSpan(s, Attr::kActor);
        ASSERT_TRUE(span.has_value());
        EXPECT_EQ(r->text.substr(span->begin, span->length),
                  roster.Name(events[static_cast<std::size_t>(r->sentences[s].event_id)].actor));
      }
    }
  }
}

}  // namespace
}  // namespace samgen
