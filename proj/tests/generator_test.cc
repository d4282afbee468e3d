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

#include "samgen/generator.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "samgen/error.h"
#include "samgen/resources.h"
#include "samgen/text.h"

namespace samgen {
namespace {

namespace fs = std::filesystem;

const Resources &Shared() {
  static const Resources res = LoadResources();
  return res;
}

fs::path TempDir(const std::string &name) {
  fs::path dir = fs::temp_directory_path() / ("samgen_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ExpectReplays(const ChallengeSet &set) {
  for (const TripleRecord &r : set.triples) {
    const AlignedTriple &t = r.triple;
    EXPECT_TRUE(SpanMatches(t.baseline)) << t.baseline.id;
    EXPECT_TRUE(SpanMatches(t.intervention)) << t.intervention.id;
    EXPECT_TRUE(SpanMatches(t.control)) << t.control.id;
    const std::string s = std::to_string(r.serial);
    EXPECT_EQ(t.baseline.id, s + "-b");
    EXPECT_EQ(t.intervention.id, s + "-i");
    EXPECT_EQ(t.control.id, s + "-c");
    EXPECT_EQ(t.baseline.answer, AnswerText(OracleAnswer(r.question, r.events, false), r.roster));
    EXPECT_EQ(t.intervention.answer,
              AnswerText(OracleAnswer(r.question, r.events, true), r.roster));
    EXPECT_EQ(t.control.answer,
              AnswerText(OracleAnswer(r.question, WithoutModified(r.events), false), r.roster));
    EXPECT_NE(t.baseline.answer, t.intervention.answer);
    EXPECT_EQ(t.intervention.answer, t.control.answer);
    EXPECT_EQ(t.meta.n_sam, static_cast<int>(t.meta.modified_sentences.size()));
    EXPECT_GE(t.meta.n_sam, 1);
    EXPECT_LE(t.meta.n_sam, 3);
  }
}

TEST(GenerationConfigTest, Validate) {
  GenerationConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.size = 0;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.events = 2;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.max_sam = 4;
  EXPECT_THROW(c.Validate(), Error);
  c.max_sam = 0;
  EXPECT_THROW(c.Validate(), Error);
}

TEST(GenerateSetTest, SingleTriple) {
  GenerationConfig c;
  c.seed = 5;
  c.size = 1;
  ChallengeSet set = GenerateSet(c, Shared());
  ASSERT_EQ(set.triples.size(), 1u);
  ExpectReplays(set);
  EXPECT_EQ(set.triples[0].events.size(), 6u);
}

TEST(GenerateSetTest, ParallelMatchesSequential) {
  GenerationConfig c;
  c.seed = 12;
  c.size = 120;
  c.jobs = 1;
  const std::string one = ChallengeJson(GenerateSet(c, Shared())).dump();
  c.jobs = 8;
  ChallengeSet eight = GenerateSet(c, Shared());
  EXPECT_EQ(ChallengeJson(eight).dump(), one);
  ExpectReplays(eight);
}

TEST(GenerateSetTest, SplitsShareNoTemplates) {
  GenerationConfig c;
  c.seed = 3;
  c.size = 80;
  c.split = SplitSelector::kTrain;
  std::set<std::string> train;
  for (const TripleRecord &r : GenerateSet(c, Shared()).triples) {
    train.insert(r.templates.begin(), r.templates.end());
  }
  c.split = SplitSelector::kEval;
  for (const TripleRecord &r : GenerateSet(c, Shared()).triples) {
    for (const std::string &t : r.templates) EXPECT_EQ(train.count(t), 0u) << t;
  }
}

TEST(WriteChallengeSetTest, RoundTripAndOracleReplay) {
  const fs::path dir = TempDir("roundtrip");
  GenerationConfig c;
  c.seed = 21;
  c.size = 40;
  ChallengeSet written = GenerateToDirectory(c, Shared(), dir, false);
  ASSERT_TRUE(fs::exists(dir / kChallengeFile));
  ASSERT_TRUE(fs::exists(dir / kMetadataFile));

  ChallengeSet loaded = LoadChallengeSet(dir);
  ASSERT_EQ(loaded.triples.size(), written.triples.size());
  ExpectReplays(loaded);
  EXPECT_EQ(ChallengeJson(loaded).dump(), ChallengeJson(written).dump());
  EXPECT_EQ(MetadataJsonl(loaded), Slurp(dir / kMetadataFile));

  auto challenge = nlohmann::json::parse(Slurp(dir / kChallengeFile));
  EXPECT_EQ(challenge["version"], kSetVersion);
  EXPECT_EQ(challenge["data"].size(), 40u);
  EXPECT_EQ(challenge["data"][0]["paragraphs"].size(), 3u);
  fs::remove_all(dir);
}

TEST(WriteChallengeSetTest, RefusesNonEmptyDirectory) {
  const fs::path dir = TempDir("refuse");
  fs::create_directories(dir);
  std::ofstream(dir / "keep.txt") << "x";
  GenerationConfig c;
  c.size = 2;
  EXPECT_THROW(GenerateToDirectory(c, Shared(), dir, false), Error);
  EXPECT_FALSE(fs::exists(dir / kChallengeFile));
  EXPECT_NO_THROW(GenerateToDirectory(c, Shared(), dir, true));
  EXPECT_TRUE(fs::exists(dir / kChallengeFile));
  fs::remove_all(dir);
}

TEST(GenerateSetTest, CapacityExceeded) {
  GenerationConfig c;
  c.events = 3;
  c.size = 100000;
  EXPECT_THROW(GenerateSet(c, Shared()), CapacityExceeded);
}

TEST(QuestionJsonTest, RoundTripCatalog) {
  const Roster roster({"Naomi Daniel", "Amanda Collins", "Linda Burger"});
  for (const QuestionForm &q : QuestionCatalog()) {
    QuestionForm bound = q;
    if (auto *b = std::get_if<Bridge>(&bound)) b->anchor = {EventKind::kFoul, Role::kActor, {2}};
    if (auto *c = std::get_if<Compare>(&bound)) {
      c->pair = {EventDescriptor{EventKind::kGoal, Role::kActor, {0}},
                 EventDescriptor{EventKind::kGoal, Role::kActor, {1}}};
    }
    nlohmann::json j = QuestionJson(bound, roster);
    EXPECT_TRUE(ParseQuestionJson(j, roster) == bound) << j.dump();
    EXPECT_TRUE(ParseQuestionTypeKey(QuestionTypeKey(bound)).has_value());
  }
}

TEST(CountPassageTest, SimpleCounts) {
  const std::vector<std::string> names = {"Naomi Daniel", "Amanda Collins", "Linda Burger"};
  PassageStats s = CountPassage(
      "Naomi Daniel scored from 26 metres and Amanda Collins celebrated.", names);
  EXPECT_EQ(s.words, 10u);
  EXPECT_EQ(s.entities, 2u);
  EXPECT_EQ(s.numbers, 1u);
  try {
    CountPassage("", names);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPassage);
  }
}

TEST(CorpusStatisticsTest, EmptySet) {
  EXPECT_THROW(CorpusStatistics(ChallengeSet{}), Error);
}

TEST(SampleRosterTest, DistinctNames) {
  Rng rng(2);
  Roster r = SampleRoster(Shared().names, kRosterSize, rng);
  ASSERT_EQ(r.size(), kRosterSize);
  std::set<std::string> given, family;
  for (const std::string &n : r.names()) {
    auto space = n.find(' ');
    given.insert(n.substr(0, space));
    family.insert(n.substr(space + 1));
  }
  EXPECT_EQ(given.size(), kRosterSize);
  EXPECT_EQ(family.size(), kRosterSize);
}

}  // namespace
}  // namespace samgen
