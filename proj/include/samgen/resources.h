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

// Loading of the shipped data files: seed templates, grammar rules, the SAM
// lexicon and the player name inventory.

#ifndef SAMGEN_RESOURCES_H_
#define SAMGEN_RESOURCES_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "samgen/grammar.h"
#include "samgen/lexicon.h"
#include "samgen/text.h"

namespace samgen {

struct Resources {
  Grammar grammar;
  SamLexicon lexicon;
  NameLexicon names;
};

// $SAM_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path DefaultDataDir();

// Reads templates.txt, grammar.txt, sam_lexicon.txt and names.txt from dir
// and validates the grammar.
Resources LoadResources(const std::filesystem::path &dir);
inline Resources LoadResources() { return LoadResources(DefaultDataDir()); }

// "GIVEN <name>" and "FAMILY <name>" lines.
NameLexicon ParseNames(std::string_view text);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view contents);

}  // namespace samgen

#endif  // SAMGEN_RESOURCES_H_
