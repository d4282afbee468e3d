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

#include "samgen/lexicon.h"

#include <set>

#include "gtest/gtest.h"
#include "samgen/error.h"
#include "samgen/resources.h"

namespace samgen {
namespace {

const VerbLexeme kCurlIn{"curl", "curled", "curling", "in"};
constexpr const char *kPre = "After the kickoff Naomi Daniel";
constexpr const char *kPost = "a goal from 26 metres away.";

std::string Insert(SamCategory category, const char *surface, VerbForm form) {
  return InsertSam(kPre, kCurlIn, kPost, SamEntry{category, surface, form});
}

TEST(InsertSamTest, CategoryRows) {
  EXPECT_EQ(Insert(SamCategory::kModalNegation, "couldn't", VerbForm::kBareInfinitive),
            "After the kickoff Naomi Daniel couldn't curl in a goal from 26 metres away.");
  EXPECT_EQ(Insert(SamCategory::kAdverbialModification, "almost", VerbForm::kPastTense),
            "After the kickoff Naomi Daniel almost curled in a goal from 26 metres away.");
  EXPECT_EQ(Insert(SamCategory::kImplicitNegation, "was prevented from", VerbForm::kGerund),
            "After the kickoff Naomi Daniel was prevented from curling in a goal from 26 "
            "metres away.");
  EXPECT_EQ(Insert(SamCategory::kExplicitNegation, "didn't succeed in", VerbForm::kGerund),
            "After the kickoff Naomi Daniel didn't succeed in curling in a goal from 26 "
            "metres away.");
  EXPECT_EQ(Insert(SamCategory::kPolarityReversing, "lacked the nerve to",
                   VerbForm::kToInfinitive),
            "After the kickoff Naomi Daniel lacked the nerve to curl in a goal from 26 "
            "metres away.");
}

TEST(InsertSamTest, UnmodifiedUsesPastTense) {
  EXPECT_EQ(ComposeVerbPhrase(kPre, kCurlIn, kPost),
            "After the kickoff Naomi Daniel curled in a goal from 26 metres away.");
  EXPECT_EQ(ComposeVerbPhrase("She", VerbLexeme{"score", "scored", "scoring", ""}, "."),
            "She scored.");
}

TEST(InsertSamTest, MissingFormFails) {
  VerbLexeme partial{"curl", "curled", "", "in"};
  try {
    InsertSam(kPre, partial, kPost, SamEntry{SamCategory::kImplicitNegation, "was kept from",
                                            VerbForm::kGerund});
    FAIL() << "expected VerbFormUnavailable";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kVerbFormUnavailable);
  }
}

TEST(VerbLexemeTest, Inflect) {
  EXPECT_EQ(kCurlIn.Inflect(VerbForm::kBareInfinitive), "curl in");
  EXPECT_EQ(kCurlIn.Inflect(VerbForm::kPastTense), "curled in");
  EXPECT_EQ(kCurlIn.Inflect(VerbForm::kGerund), "curling in");
  EXPECT_EQ(kCurlIn.Inflect(VerbForm::kToInfinitive), "curl in");
}

TEST(SamLexiconTest, ParseLines) {
  SamLexicon lex = SamLexicon::Parse(
      "# comment\n"
      "SAM I2 PastTense :: almost\n"
      "SAM I6 ToInfinitive :: did not manage to\n");
  ASSERT_EQ(lex.entries().size(), 2u);
  EXPECT_EQ(lex.entries()[1].category, SamCategory::kNegatedPolarityPreserving);
  EXPECT_EQ(lex.entries()[1].surface, "did not manage to");
  EXPECT_EQ(lex.entries()[1].verb_form, VerbForm::kToInfinitive);
}

TEST(SamLexiconTest, RejectsLongOrBadEntries) {
  EXPECT_THROW(SamLexicon::Parse("SAM I6 ToInfinitive :: wouldn't find the opportunity to\n"),
               Error);
  EXPECT_THROW(SamLexicon::Parse("SAM I9 PastTense :: almost\n"), Error);
  EXPECT_THROW(SamLexicon::Parse("SAM I2 Perfect :: almost\n"), Error);
  EXPECT_THROW(SamLexicon::Parse("SAM I2 PastTense almost\n"), Error);
  EXPECT_THROW(SamLexicon::Parse("SAM I2 PastTense :: \n"), Error);
}

TEST(SamLexiconTest, ShippedLexiconCoversEveryCategory) {
  const Resources res = LoadResources();
  for (SamCategory c : kAllSamCategories) {
    std::vector<SamEntry> entries = res.lexicon.ForCategory(c);
    EXPECT_GE(entries.size(), 3u) << SamCategoryName(c);
    std::set<VerbForm> forms;
    for (const SamEntry &e : entries) forms.insert(e.verb_form);
    EXPECT_EQ(forms.size(), 1u) << SamCategoryName(c);
  }
  for (const SamEntry &e : res.lexicon.entries()) {
    std::size_t words = 1;
    for (char ch : e.surface) words += ch == ' ' ? 1 : 0;
    EXPECT_GE(words, 1u);
    EXPECT_LE(words, 4u) << e.surface;
  }
}

}  // namespace
}  // namespace samgen
