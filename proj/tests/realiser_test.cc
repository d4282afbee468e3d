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

#include "samgen/realiser.h"

#include <algorithm>
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
RULE V.Goal2 -> [slot|slotted|slotting|in] the ball
RULE PP.Distance -> from #Distance away
RULE PP.Time -> in the #Time
RULE Assist@assist -> following a pass from #Coactor
RULE Assist@solo -> on her own
TEMPLATE curl-1 Goal: %Con #Actor @SAM $V.Goal $PP.Distance %Assist $PP.Time .
TEMPLATE slot-2 Goal: %Con #Actor @SAM $V.Goal2 $PP.Distance $PP.Time , as she went on .
TEMPLATE early-pronoun Goal: she said #Actor @SAM $V.Goal $PP.Distance $PP.Time .
TEMPLATE lit Injury: Play stopped for a while .
)";

Grammar CurlGrammar() {
  Grammar g;
  g.Parse(kCurlGrammar);
  return g;
}

const Roster kRoster({"Naomi Daniel", "Linda Burger", "Amanda Collins"});

std::vector<Event> TwoGoalEvents() {
  Event first;
  first.id = 0;
  first.actor = PlayerRef{0};
  first.coactor = PlayerRef{1};
  first.distance = 26;
  first.time = 4;
  Event second;
  second.id = 1;
  second.actor = PlayerRef{2};
  second.distance = 18;
  second.time = 37;
  return {first, second};
}

TEST(RealiseSentenceTest, CurlTemplateUnmodified) {
  Grammar g = CurlGrammar();
  RealisationContext ctx;
  Rng rng(1);
  RealisedSentence s =
      RealiseSentence(TwoGoalEvents()[0], g.FindTemplate("curl-1"), g, kRoster, ctx, rng);
  EXPECT_EQ(s.text,
            "After the kickoff Naomi Daniel curled in a goal from 26 metres away following a "
            "pass from Linda Burger in the 4th minute.");
  EXPECT_EQ(s.text.substr(At(s.spans, Attr::kActor)->begin, 12), "Naomi Daniel");
  EXPECT_EQ(
      s.text.substr(At(s.spans, Attr::kDistance)->begin, At(s.spans, Attr::kDistance)->length),
      "26 metres");
  EXPECT_EQ(s.text.substr(At(s.spans, Attr::kCoactor)->begin, 12), "Linda Burger");
  EXPECT_EQ(s.text.substr(At(s.spans, Attr::kTime)->begin, At(s.spans, Attr::kTime)->length),
            "4th minute");
}

TEST(RealiseSentenceTest, CurlTemplateWithSam) {
  Grammar g = CurlGrammar();
  RealisationContext ctx;
  SamEntry almost{SamCategory::kAdverbialModification, "almost", VerbForm::kPastTense};
  ctx.sam = &almost;
  Rng rng(1);
  RealisedSentence s =
      RealiseSentence(TwoGoalEvents()[0], g.FindTemplate("curl-1"), g, kRoster, ctx, rng);
  EXPECT_EQ(s.text.rfind("After the kickoff Naomi Daniel almost curled in a goal", 0), 0u);
  EXPECT_EQ(s.text.substr(At(s.spans, Attr::kTime)->begin, At(s.spans, Attr::kTime)->length),
            "4th minute");
}

TEST(RealiseSentenceTest, LiteralTemplateVerbatim) {
  Grammar g = CurlGrammar();
  Event e;
  e.kind = EventKind::kInjury;
  e.time = 9;
  RealisationContext ctx;
  Rng rng(3);
  // No time or actor slot: the attribute check rejects it.
  EXPECT_THROW(RealiseSentence(e, g.FindTemplate("lit"), g, kRoster, ctx, rng), Error);

  Grammar verbatim;
  verbatim.Parse("TEMPLATE lit Injury: #Actor went down in the #Time .\n");
  RealisedSentence s =
      RealiseSentence(e, verbatim.FindTemplate("lit"), verbatim, kRoster, ctx, rng);
  EXPECT_EQ(s.text, "Naomi Daniel went down in the 9th minute.");
}

TEST(RealiseSentenceTest, MissingExpansion) {
  Grammar g;
  g.Parse("TEMPLATE t Goal: #Actor @SAM $V.Nope #Distance #Time .\n");
  RealisationContext ctx;
  Rng rng(0);
  try {
    RealiseSentence(TwoGoalEvents()[1], g.FindTemplate("t"), g, kRoster, ctx, rng);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingExpansion);
  }
}

TEST(RealiseSentenceTest, PronounNeedsAntecedent) {
  Grammar g = CurlGrammar();
  RealisationContext ctx;
  Rng rng(0);
  EXPECT_THROW(RealiseSentence(TwoGoalEvents()[1], g.FindTemplate("early-pronoun"), g, kRoster,
                               ctx, rng),
               Error);
  RealisedSentence ok =
      RealiseSentence(TwoGoalEvents()[1], g.FindTemplate("slot-2"), g, kRoster, ctx, rng);
  EXPECT_NE(ok.text.find("as she went on"), std::string::npos);
}

TEST(RealiseReportTest, TwoGoalPassage) {
  Grammar g = CurlGrammar();
  std::vector<Event> events = TwoGoalEvents();
  std::vector<const Template *> templates = {&g.FindTemplate("curl-1"), &g.FindTemplate("slot-2")};
  Rng rng(5);
  RealisedReport r = RealiseReport(events, templates, g, kRoster, rng);
  EXPECT_EQ(r.text,
            "After the kickoff Naomi Daniel curled in a goal from 26 metres away following a "
            "pass from Linda Burger in the 4th minute. Then Amanda Collins slotted in the ball "
            "from 18 metres away in the 37th minute, as she went on.");
  ASSERT_EQ(r.boundaries.size(), 2u);
  EXPECT_EQ(r.text.substr(r.AttrSpan(1, Attr::kActor)->begin, 14), "Amanda Collins");
}

TEST(RealiseReportTest, SingleEvent) {
  Grammar g = CurlGrammar();
  std::vector<Event> events = {TwoGoalEvents()[0]};
  std::vector<const Template *> templates = {&g.FindTemplate("curl-1")};
  Rng rng(5);
  RealisedReport r = RealiseReport(events, templates, g, kRoster, rng);
  ASSERT_EQ(r.sentences.size(), 1u);
  EXPECT_EQ(r.text, r.sentences[0].text);
}

std::vector<Event> RandomEvents(Rng &rng, std::size_t roster) {
  std::vector<Event> events;
  const int n = rng.Between(1, 8);
  std::vector<int> times = rng.Distinct(kMinMinute, kMaxMinute, static_cast<std::size_t>(n));
  std::sort(times.begin(), times.end());
  for (int i = 0; i < n; ++i) {
    Event e;
    e.id = i;
    e.kind = kAllEventKinds[rng.Below(kAllEventKinds.size())];
    e.actor = PlayerRef{rng.Below(roster)};
    e.time = times[static_cast<std::size_t>(i)];
    if (e.kind == EventKind::kGoal) e.distance = rng.Between(kMinDistance, kMaxDistance);
    if (e.kind == EventKind::kFoul || e.kind == EventKind::kSubstitution ||
        (e.kind != EventKind::kGoal && rng.Chance(0.5)) || rng.Chance(0.5)) {
      std::size_t other = rng.Below(roster - 1);
      if (other >= e.actor.index) ++other;
      e.coactor = PlayerRef{other};
    }
    events.push_back(e);
  }
  return events;
}

TEST(ShippedRealiserPropertyTest, BoundariesSpansAndCleanBaseline) {
  const Resources res = LoadResources();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 22; ++i) {
    names.push_back(res.names.given()[i] + " " + res.names.family()[i]);
  }
  const Roster roster(names);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    std::vector<Event> events = RandomEvents(rng, roster.size());
    const SplitSelector split = seed % 2 ? SplitSelector::kTrain : SplitSelector::kEval;
    RealisedReport r = RealiseReport(events, res.grammar, split, roster, rng);

    std::string joined;
    for (const Span &b : r.boundaries) {
      if (!joined.empty()) joined += ' ';
      joined += r.text.substr(b.begin, b.length);
    }
    EXPECT_EQ(joined, r.text);

    for (std::size_t i = 0; i < events.size(); ++i) {
      const Event &e = events[i];
      EXPECT_TRUE(res.grammar.FindTemplate(r.sentences[i].template_id).InSplit(split));
      auto check = [&](Attr attr, const std::string &want) {
        auto span = r.AttrSpan(i, attr);
        ASSERT_TRUE(span.has_value());
        EXPECT_EQ(r.text.substr(span->begin, span->length), want);
      };
      check(Attr::kActor, roster.Name(e.actor));
      check(Attr::kTime, MinuteText(e.time));
      if (e.coactor) check(Attr::kCoactor, roster.Name(*e.coactor));
      if (e.distance) check(Attr::kDistance, DistanceText(*e.distance));
    }

    const std::vector<std::string> tokens = NormalizedTokens(r.text);
    for (const SamEntry &entry : res.lexicon.entries()) {
      EXPECT_TRUE(FindTokenSequence(tokens, NormalizedTokens(entry.surface)).empty())
          << entry.surface << " in " << r.text;
    }

    Rng replay(seed);
    std::vector<Event> again = RandomEvents(replay, roster.size());
    EXPECT_EQ(RealiseReport(again, res.grammar, split, roster, replay).text, r.text);
  }
}

}  // namespace
}  // namespace samgen
