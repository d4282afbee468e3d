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

#include "samgen/quality.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "samgen/error.h"
#include "samgen/generator.h"
#include "samgen/resources.h"
#include "samgen/text.h"

namespace samgen {
namespace {

const ChallengeSet &Generated() {
  static const ChallengeSet set = [] {
    GenerationConfig c;
    c.seed = 17;
    c.size = 200;
    return GenerateSet(c, LoadResources());
  }();
  return set;
}

std::vector<std::string> Contexts(const std::vector<const MRCInstance *> &instances) {
  std::vector<std::string> out;
  for (const MRCInstance *m : instances) out.push_back(m->context);
  return out;
}

TEST(JaccardTest, Basics) {
  EXPECT_DOUBLE_EQ(Jaccard("Naomi scored a goal.", "naomi SCORED a goal"), 1.0);
  EXPECT_DOUBLE_EQ(Jaccard("red blue", "green yellow"), 0.0);
  EXPECT_DOUBLE_EQ(Jaccard("a b c", "b c d"), 0.5);
}

TEST(JaccardPropertyTest, SymmetricAndOrderInvariant) {
  const std::vector<std::string> vocab = {"goal", "Naomi", "the", "26", "metres", "away", "she"};
  Rng rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::string> a, b;
    for (int i = rng.Between(1, 8); i > 0; --i) a.push_back(rng.Pick(vocab));
    for (int i = rng.Between(1, 8); i > 0; --i) b.push_back(rng.Pick(vocab));
    auto join = [](const std::vector<std::string> &w) {
      std::string s;
      for (const std::string &x : w) s += x + " ";
      return s;
    };
    const double ab = Jaccard(join(a), join(b));
    EXPECT_DOUBLE_EQ(ab, Jaccard(join(b), join(a)));
    std::vector<std::string> shuffled = a;
    rng.Shuffle(shuffled);
    EXPECT_DOUBLE_EQ(ab, Jaccard(join(shuffled), join(b)));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(LexicalSimilarityTest, RequiresTwoParagraphs) {
  std::vector<std::string> one = {"a b"};
  EXPECT_THROW(LexicalSimilarity(one, 10, 0), Error);
  std::vector<std::string> same = {"a b", "a b", "b a"};
  SimilarityResult r = LexicalSimilarity(same, 10, 0);
  EXPECT_EQ(r.pairs, 3u);
  EXPECT_DOUBLE_EQ(r.mean, 1.0);
}

TEST(LexicalSimilarityTest, GeneratedPassagesAreDiverse) {
  SimilarityResult r = LexicalSimilarity(Contexts(Baselines(Generated())), 200, 1);
  EXPECT_EQ(r.pairs, 200u);
  EXPECT_GT(r.mean, 0.0);
  EXPECT_LE(r.mean, 0.35);
}

TEST(NaturalityTest, OverlapExtremes) {
  std::vector<std::string> same = {
      "After that Naomi Daniel scored a goal. After that Naomi Daniel scored a goal."};
  NaturalityResult full = Naturality(same);
  EXPECT_DOUBLE_EQ(full.lemma_overlap, 1.0);
  EXPECT_DOUBLE_EQ(full.argument_overlap, 1.0);
  EXPECT_DOUBLE_EQ(full.score, 1.0);

  std::vector<std::string> apart = {"goals arrived quickly. rain fell heavily."};
  NaturalityResult none = Naturality(apart);
  EXPECT_DOUBLE_EQ(none.lemma_overlap, 0.0);
  EXPECT_DOUBLE_EQ(none.argument_overlap, 0.0);
  EXPECT_DOUBLE_EQ(none.score, 0.0);

  std::vector<std::string> pronoun = {
      "Then Naomi Daniel scored. Later she celebrated with her family."};
  EXPECT_DOUBLE_EQ(Naturality(pronoun).argument_overlap, 1.0);
  EXPECT_DOUBLE_EQ(Naturality(pronoun).pronoun_antecedent, 1.0);
  std::vector<std::string> dangling = {"She scored. Then Naomi Daniel celebrated."};
  EXPECT_DOUBLE_EQ(Naturality(dangling).pronoun_antecedent, 0.0);
}

TEST(NaturalityTest, TooShort) {
  std::vector<std::string> single = {"Naomi Daniel scored a goal."};
  try {
    Naturality(single);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooShort);
  }
}

TEST(NaturalityTest, GeneratedBeatsShuffled) {
  std::vector<std::string> paragraphs = Contexts(Baselines(Generated()));
  std::vector<std::string> shuffled;
  Rng rng(6);
  for (const std::string &p : paragraphs) {
    std::vector<std::string> sentences;
    for (std::string_view s : SplitSentences(p)) sentences.emplace_back(s);
    rng.Shuffle(sentences);
    std::string joined;
    for (const std::string &s : sentences) joined += (joined.empty() ? "" : " ") + s;
    shuffled.push_back(joined);
  }
  NaturalityResult original = Naturality(paragraphs);
  NaturalityResult mixed = Naturality(shuffled);
  EXPECT_GE(original.pronoun_antecedent, mixed.pronoun_antecedent);
  EXPECT_DOUBLE_EQ(original.pronoun_antecedent, 1.0);
  for (double v : {original.score, original.lemma_overlap, original.argument_overlap}) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(ScanCorpusTest, Examples) {
  const std::vector<SamEntry> almost = {
      {SamCategory::kAdverbialModification, "almost", VerbForm::kPastTense}};
  std::vector<ScanPassage> passages = {
      {"She almost scored.", {}},
      {"Nothing happened here.", {}},
      {"The keeper was prevented from moving.", {}},
  };
  ScanResult r = ScanCorpus(passages, almost, 100);
  EXPECT_EQ(r.with_expression, 1u);
  EXPECT_NEAR(r.fraction, 1.0 / 3.0, 1e-12);

  ScanResult empty = ScanCorpus(passages, std::vector<SamEntry>{}, 100);
  EXPECT_EQ(empty.fraction, 0.0);
  EXPECT_EQ(empty.near_fraction, 0.0);

  std::vector<ScanPassage> near = {{"Naomi Daniel almost scored.", {Span{0, 12}}}};
  EXPECT_EQ(ScanCorpus(near, almost, 1).near_answer, 1u);
  EXPECT_EQ(ScanCorpus(near, almost, 0).near_answer, 0u);
}

TEST(ScanCorpusTest, InterventionsAllContainExpressions) {
  const Resources res = LoadResources();
  std::vector<ScanPassage> passages;
  for (const MRCInstance *m : Interventions(Generated())) {
    passages.push_back({m->context, {Span{m->answer_start, m->answer.size()}}});
  }
  ScanResult r = ScanCorpus(passages, res.lexicon.entries(), 100);
  EXPECT_DOUBLE_EQ(r.fraction, 1.0);

  std::vector<ScanPassage> controls;
  for (const MRCInstance *m : Controls(Generated())) controls.push_back({m->context, {}});
  EXPECT_DOUBLE_EQ(ScanCorpus(controls, res.lexicon.entries(), 100).fraction, 0.0);
}

TEST(ScanCorpusPropertyTest, MonotoneInWindow) {
  const Resources res = LoadResources();
  std::vector<ScanPassage> passages;
  for (const MRCInstance *m : Interventions(Generated())) {
    passages.push_back({m->context, {Span{m->answer_start, m->answer.size()}}});
  }
  std::size_t previous = 0;
  for (std::size_t window : {0u, 5u, 20u, 50u, 100u, 200u, 400u, 2000u}) {
    ScanResult r = ScanCorpus(passages, res.lexicon.entries(), window);
    EXPECT_GE(r.near_answer, previous);
    EXPECT_LE(r.near_fraction, r.fraction);
    previous = r.near_answer;
  }
  EXPECT_EQ(previous, passages.size());
}

}  // namespace
}  // namespace samgen
