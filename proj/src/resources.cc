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

#include "samgen/resources.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "samgen/error.h"

namespace samgen {

std::filesystem::path DefaultDataDir() {
  if (const char *env = std::getenv("SAM_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return SAMGEN_DATA_DIR;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

NameLexicon ParseNames(std::string_view text) {
  std::vector<std::string> given;
  std::vector<std::string> family;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string tag;
    std::string name;
    if (!(fields >> tag) || tag[0] == '#') continue;
    std::string extra;
    if (!(fields >> name) || (fields >> extra)) {
      throw Error(ErrorCode::kParse, "names line " + std::to_string(number) +
                                         ": expected '<GIVEN|FAMILY> <name>'");
    }
    if (tag == "GIVEN") {
      given.push_back(name);
    } else if (tag == "FAMILY") {
      family.push_back(name);
    } else {
      throw Error(ErrorCode::kParse,
                  "names line " + std::to_string(number) + ": unknown tag " + tag);
    }
  }
  return NameLexicon(std::move(given), std::move(family));
}

Resources LoadResources(const std::filesystem::path &dir) {
  Resources res;
  for (const char *file : {"templates.txt", "grammar.txt"}) {
    std::filesystem::path path = dir / file;
    res.grammar.Parse(ReadFile(path), path.string());
  }
  res.grammar.Validate();
  res.lexicon = SamLexicon::Parse(ReadFile(dir / "sam_lexicon.txt"));
  res.names = ParseNames(ReadFile(dir / "names.txt"));
  if (res.lexicon.empty()) throw Error(ErrorCode::kParse, "SAM lexicon is empty");
  return res;
}

}  // namespace samgen
