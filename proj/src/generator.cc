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

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "samgen/error.h"
#include "samgen/realiser.h"
#include "samgen/sam.h"
#include "samgen/text.h"

namespace samgen {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<std::string_view, 4> kTargetNames = {"actor", "coactor", "time",
                                                          "distance"};
constexpr std::array<std::string_view, 4> kComparisonNames = {"earlier", "later", "farther",
                                                              "closer"};

[[noreturn]] void ParseFail(const std::string &what) { throw Error(ErrorCode::kParse, what); }

Attr TargetAttr(Target target) {
  switch (target) {
    case Target::kActor: return Attr::kActor;
    case Target::kCoactor: return Attr::kCoactor;
    case Target::kTime: return Attr::kTime;
    case Target::kDistance: return Attr::kDistance;
  }
  return Attr::kActor;
}

std::optional<Target> ParseTarget(std::string_view name) {
  for (std::size_t i = 0; i < kTargetNames.size(); ++i) {
    if (kTargetNames[i] == name) return static_cast<Target>(i);
  }
  return std::nullopt;
}

std::vector<std::string_view> SplitKey(std::string_view key) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t colon = key.find(':', start);
    parts.push_back(key.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return parts;
}

ordered_json DescriptorJson(const EventDescriptor &d, const Roster &roster) {
  ordered_json out;
  out["kind"] = EventKindName(d.kind);
  out["role"] = d.role == Role::kActor ? "actor" : "coactor";
  out["player"] = roster.Name(d.player);
  return out;
}

PlayerRef ParsePlayer(const json &name, const Roster &roster) {
  auto ref = roster.Find(name.get<std::string>());
  if (!ref) ParseFail("unknown player " + name.get<std::string>());
  return *ref;
}

EventDescriptor ParseDescriptor(const json &j, const Roster &roster) {
  EventDescriptor d;
  auto kind = ParseEventKind(j.at("kind").get<std::string>());
  if (!kind) ParseFail("unknown event kind in descriptor");
  d.kind = *kind;
  d.role = j.at("role").get<std::string>() == "coactor" ? Role::kCoactor : Role::kActor;
  d.player = ParsePlayer(j.at("player"), roster);
  return d;
}

ordered_json EventJson(const Event &e, const Roster &roster) {
  ordered_json out;
  out["id"] = e.id;
  out["kind"] = EventKindName(e.kind);
  out["actor"] = roster.Name(e.actor);
  out["coactor"] = e.coactor ? ordered_json(roster.Name(*e.coactor)) : ordered_json(nullptr);
  out["distance"] = e.distance ? ordered_json(*e.distance) : ordered_json(nullptr);
  out["time"] = e.time;
  out["modified"] = e.modified;
  ordered_json sam = ordered_json::array();
  for (SamCategory c : e.sam) sam.push_back(SamCategoryName(c));
  out["sam"] = sam;
  return out;
}

Event ParseEvent(const json &j, const Roster &roster) {
  Event e;
  e.id = j.at("id").get<int>();
  auto kind = ParseEventKind(j.at("kind").get<std::string>());
  if (!kind) ParseFail("unknown event kind " + j.at("kind").dump());
  e.kind = *kind;
  e.actor = ParsePlayer(j.at("actor"), roster);
  if (!j.at("coactor").is_null()) e.coactor = ParsePlayer(j.at("coactor"), roster);
  if (!j.at("distance").is_null()) e.distance = j.at("distance").get<int>();
  e.time = j.at("time").get<int>();
  e.modified = j.at("modified").get<bool>();
  for (const json &c : j.at("sam")) {
    auto category = ParseSamCategory(c.get<std::string>());
    if (!category) ParseFail("unknown SAM category " + c.dump());
    e.sam.push_back(*category);
  }
  return e;
}

ordered_json InstanceJson(const MRCInstance &instance) {
  ordered_json answer;
  answer["text"] = instance.answer;
  answer["answer_start"] = instance.answer_start;
  ordered_json qa;
  qa["id"] = instance.id;
  qa["question"] = instance.question;
  qa["answers"] = ordered_json::array({answer});
  ordered_json paragraph;
  paragraph["context"] = instance.context;
  paragraph["qas"] = ordered_json::array({qa});
  return paragraph;
}

MRCInstance MakeInstance(const std::string &id, const QuestionSpec &question,
                         const RealisedReport &report, const Answer &answer,
                         const Roster &roster) {
  auto sentence = report.SentenceOf(answer.event_id);
  std::optional<Span> span;
  if (sentence) span = report.AttrSpan(*sentence, TargetAttr(QuestionTarget(question.form)));
  if (!span) {
    throw Error(ErrorCode::kMissingExpansion,
                "answer of " + id + " is not surfaced in its passage");
  }
  MRCInstance out;
  out.id = id;
  out.question = question.surface;
  out.context = report.text;
  out.answer = report.text.substr(span->begin, span->length);
  out.answer_start = span->begin;
  if (out.answer != AnswerText(answer, roster)) {
    throw Error(ErrorCode::kMissingExpansion, "span of " + id + " reads '" + out.answer +
                                                  "' instead of '" +
                                                  AnswerText(answer, roster) + "'");
  }
  return out;
}

}  // namespace

void GenerationConfig::Validate() const {
  if (size < 1) throw Error(ErrorCode::kInvalidArgument, "size must be at least 1");
  if (events < 3 || events > 12) {
    throw Error(ErrorCode::kInvalidArgument, "events must be between 3 and 12");
  }
  if (max_sam < 1 || max_sam > kMaxSamPerInstance) {
    throw Error(ErrorCode::kInvalidArgument, "max-sam must be between 1 and 3");
  }
}

Roster SampleRoster(const NameLexicon &names, std::size_t n, Rng &rng) {
  if (names.given().size() < n || names.family().size() < n) {
    throw Error(ErrorCode::kInvalidArgument,
                "name lexicon too small for a roster of " + std::to_string(n));
  }
  std::vector<std::string> given = names.given();
  std::vector<std::string> family = names.family();
  rng.Shuffle(given);
  rng.Shuffle(family);
  std::vector<std::string> players;
  for (std::size_t i = 0; i < n; ++i) players.push_back(given[i] + " " + family[i]);
  return Roster(std::move(players));
}

std::vector<ContentPlan> PlanSet(const GenerationConfig &config) {
  config.Validate();
  Rng rng(DeriveSeed(config.seed, "plan"));
  const std::vector<QuestionForm> &catalog = QuestionCatalog();
  std::vector<std::uint64_t> remaining;
  std::uint64_t total = 0;
  for (const QuestionForm &q : catalog) {
    remaining.push_back(KindSequenceCapacity(q, config.events, 1));
    total += remaining.back();
  }
  if (config.size > total) throw CapacityExceeded(config.size, total);

  std::vector<ContentPlan> plans;
  plans.reserve(config.size);
  for (std::size_t i = 0; i < config.size; ++i) {
    std::vector<std::size_t> open;
    for (std::size_t q = 0; q < catalog.size(); ++q) {
      if (remaining[q] > 0) open.push_back(q);
    }
    const std::size_t q = rng.Pick(open);
    --remaining[q];
    const int max_sam = std::min(config.max_sam, MaxFeasibleSam(catalog[q], config.events));
    plans.push_back(BuildPlan(catalog[q], config.events, rng.Between(1, max_sam), rng));
  }
  return UniqueTypeOrders(std::move(plans), rng);
}

TripleRecord BuildTriple(const ContentPlan &plan, std::size_t serial,
                         const GenerationConfig &config, const Resources &resources) {
  Rng rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(serial)));
  TripleRecord record;
  record.serial = serial;
  record.roster = SampleRoster(resources.names, kRosterSize, rng);
  Instantiation inst = Instantiate(plan, record.roster, rng);
  record.question = inst.question;
  record.events = std::move(inst.events);

  std::map<int, SamEntry> entries;
  for (Event &e : record.events) {
    if (!e.modified) continue;
    SamEntry entry = SampleSamEntry(resources.lexicon, rng);
    e.sam = {entry.category};
    entries[e.id] = entry;
  }
  ValidateReport(record.events);

  const RealisedReport baseline =
      RealiseReport(record.events, resources.grammar, config.split, record.roster, rng);
  const RealisedReport intervention = MakeIntervention(baseline, record.events, entries);
  std::vector<std::size_t> modified_sentences;
  for (const Event &e : record.events) {
    if (e.modified) modified_sentences.push_back(*baseline.SentenceOf(e.id));
  }
  const RealisedReport control = MakeControl(intervention, modified_sentences);

  const Answer a = OracleAnswer(record.question, record.events, false);
  const Answer a_prime = OracleAnswer(record.question, record.events, true);
  const std::vector<Event> remaining = WithoutModified(record.events);
  const Answer a_control = OracleAnswer(record.question, remaining, false);
  if (a == a_prime || !(a_control == a_prime)) {
    throw Error(ErrorCode::kUnsatisfiablePlan,
                "modification of triple " + std::to_string(serial) + " is not meaningful");
  }

  const std::string id = std::to_string(serial);
  AlignedTriple &t = record.triple;
  t.baseline = MakeInstance(id + "-b", record.question, baseline, a, record.roster);
  t.intervention = MakeInstance(id + "-i", record.question, intervention, a_prime,
                                record.roster);
  t.control = MakeInstance(id + "-c", record.question, control, a_control, record.roster);
  t.meta.question_type = QuestionTypeKey(record.question.form);
  for (const Event &e : record.events) {
    t.meta.sam_categories.insert(t.meta.sam_categories.end(), e.sam.begin(), e.sam.end());
  }
  t.meta.n_sam = static_cast<int>(entries.size());
  t.meta.modified_sentences = modified_sentences;
  for (const RealisedSentence &s : baseline.sentences) record.templates.push_back(s.template_id);
  return record;
}

ChallengeSet GenerateSet(const GenerationConfig &config, const Resources &resources) {
  const std::vector<ContentPlan> plans = PlanSet(config);
  ChallengeSet set;
  set.triples.resize(plans.size());
  std::vector<std::exception_ptr> failures(plans.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < plans.size(); i = next++) {
      try {
        set.triples[i] = BuildTriple(plans[i], i, config, resources);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = config.jobs != 0 ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(plans.size()));
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(work);
  work();
  for (std::thread &t : threads) t.join();
  for (const std::exception_ptr &failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return set;
}

ordered_json QuestionJson(const QuestionForm &form, const Roster &roster) {
  ordered_json out;
  out["type"] = QuestionTypeKey(form);
  if (const auto *q = std::get_if<Bridge>(&form)) {
    out["anchor"] = DescriptorJson(q->anchor, roster);
    out["resolution"] = "nearest";
  } else if (const auto *q = std::get_if<Compare>(&form)) {
    out["pair"] = ordered_json::array(
        {DescriptorJson(q->pair[0], roster), DescriptorJson(q->pair[1], roster)});
  }
  return out;
}

std::optional<QuestionForm> ParseQuestionTypeKey(std::string_view key) {
  const std::vector<std::string_view> parts = SplitKey(key);
  if (parts.size() < 3) return std::nullopt;
  auto target = ParseTarget(parts.back());
  if (!target) return std::nullopt;
  const std::string_view family = parts[0];
  if (family == "order" && parts.size() == 4) {
    RetrievalOrder q;
    if (parts[1] == "time") {
      q.attr = OrderAttr::kTime;
    } else if (parts[1] == "position") {
      q.attr = OrderAttr::kPosition;
    } else {
      return std::nullopt;
    }
    try {
      q.rank = std::stoi(std::string(parts[2]));
    } catch (const std::exception &) {
      return std::nullopt;
    }
    q.target = *target;
    return q;
  }
  if (family == "argselect" && parts.size() == 4) {
    ArgSelect q;
    if (parts[1] != "max" && parts[1] != "min") return std::nullopt;
    if (parts[2] != "distance" && parts[2] != "time") return std::nullopt;
    q.agg = parts[1] == "max" ? Extremum::kMax : Extremum::kMin;
    q.over = parts[2] == "distance" ? Measure::kDistance : Measure::kTime;
    q.target = *target;
    return q;
  }
  if (family == "bridge" && parts.size() == 3) {
    if (parts[1] != "before" && parts[1] != "after") return std::nullopt;
    Bridge q;
    q.direction = parts[1] == "before" ? Direction::kBefore : Direction::kAfter;
    q.target = *target;
    return q;
  }
  if (family == "compare" && parts.size() == 3) {
    auto it = std::find(kComparisonNames.begin(), kComparisonNames.end(), parts[1]);
    if (it == kComparisonNames.end()) return std::nullopt;
    Compare q;
    q.agg = static_cast<Comparison>(it - kComparisonNames.begin());
    q.target = *target;
    return q;
  }
  return std::nullopt;
}

QuestionForm ParseQuestionJson(const json &j, const Roster &roster) {
  const std::string key = j.at("type").get<std::string>();
  std::optional<QuestionForm> form = ParseQuestionTypeKey(key);
  if (!form) ParseFail("unknown question type " + key);
  if (auto *q = std::get_if<Bridge>(&*form)) {
    q->anchor = ParseDescriptor(j.at("anchor"), roster);
  } else if (auto *q = std::get_if<Compare>(&*form)) {
    const json &pair = j.at("pair");
    if (!pair.is_array() || pair.size() != 2) ParseFail("compare question needs a pair");
    q->pair = {ParseDescriptor(pair[0], roster), ParseDescriptor(pair[1], roster)};
  }
  return *form;
}

ordered_json ChallengeJson(const ChallengeSet &set) {
  ordered_json data = ordered_json::array();
  for (const TripleRecord &r : set.triples) {
    ordered_json article;
    article["title"] = std::to_string(r.serial);
    article["paragraphs"] = ordered_json::array({InstanceJson(r.triple.baseline),
                                                 InstanceJson(r.triple.intervention),
                                                 InstanceJson(r.triple.control)});
    data.push_back(std::move(article));
  }
  ordered_json out;
  out["version"] = kSetVersion;
  out["data"] = std::move(data);
  return out;
}

ordered_json MetadataJson(const TripleRecord &record) {
  ordered_json out;
  const TripleMeta &meta = record.triple.meta;
  out["id"] = std::to_string(record.serial);
  out["question_type"] = meta.question_type;
  out["question"] = QuestionJson(record.question.form, record.roster);
  ordered_json categories = ordered_json::array();
  for (SamCategory c : meta.sam_categories) categories.push_back(SamCategoryName(c));
  out["sam_categories"] = categories;
  out["n_sam"] = meta.n_sam;
  out["modified_sentences"] = meta.modified_sentences;
  ordered_json events = ordered_json::array();
  for (const Event &e : record.events) events.push_back(EventJson(e, record.roster));
  out["events"] = events;
  out["roster"] = record.roster.names();
  out["templates"] = record.templates;
  return out;
}

std::string MetadataJsonl(const ChallengeSet &set) {
  std::string out;
  for (const TripleRecord &r : set.triples) {
    out += MetadataJson(r).dump();
    out += '\n';
  }
  return out;
}

void WriteChallengeSet(const ChallengeSet &set, const std::filesystem::path &dir, bool force) {
  namespace fs = std::filesystem;
  const bool existed = fs::exists(dir);
  if (existed && !fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, dir.string() + " exists and is not a directory");
  }
  if (existed && !fs::is_empty(dir) && !force) {
    throw Error(ErrorCode::kIo, dir.string() + " is not empty (use --force to overwrite)");
  }
  const fs::path challenge = dir / kChallengeFile;
  const fs::path metadata = dir / kMetadataFile;
  try {
    fs::create_directories(dir);
    WriteFile(challenge, ChallengeJson(set).dump() + "\n");
    WriteFile(metadata, MetadataJsonl(set));
  } catch (...) {
    std::error_code ignored;
    if (existed) {
      fs::remove(challenge, ignored);
      fs::remove(metadata, ignored);
    } else {
      fs::remove_all(dir, ignored);
    }
    throw;
  }
}

ChallengeSet GenerateToDirectory(const GenerationConfig &config, const Resources &resources,
                                 const std::filesystem::path &dir, bool force) {
  namespace fs = std::filesystem;
  if (fs::exists(dir) && fs::is_directory(dir) && !fs::is_empty(dir) && !force) {
    throw Error(ErrorCode::kIo, dir.string() + " is not empty (use --force to overwrite)");
  }
  ChallengeSet set = GenerateSet(config, resources);
  WriteChallengeSet(set, dir, force);
  return set;
}

ChallengeSet LoadChallengeSet(const std::filesystem::path &path) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::is_directory(path) ? path : path.parent_path();
  const fs::path challenge_path = fs::is_directory(path) ? path / kChallengeFile : path;

  std::map<std::string, MRCInstance> instances;
  try {
    const json challenge = json::parse(ReadFile(challenge_path));
    for (const json &article : challenge.at("data")) {
      for (const json &paragraph : article.at("paragraphs")) {
        for (const json &qa : paragraph.at("qas")) {
          MRCInstance inst;
          inst.id = qa.at("id").get<std::string>();
          inst.question = qa.at("question").get<std::string>();
          inst.context = paragraph.at("context").get<std::string>();
          const json &answer = qa.at("answers").at(0);
          inst.answer = answer.at("text").get<std::string>();
          inst.answer_start = answer.at("answer_start").get<std::size_t>();
          instances[inst.id] = std::move(inst);
        }
      }
    }
  } catch (const json::exception &e) {
    ParseFail(challenge_path.string() + ": " + e.what());
  }

  ChallengeSet set;
  std::istringstream lines(ReadFile(dir / kMetadataFile));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      TripleRecord r;
      const std::string id = j.at("id").get<std::string>();
      r.serial = std::stoull(id);
      r.roster = Roster(j.at("roster").get<std::vector<std::string>>());
      for (const json &e : j.at("events")) r.events.push_back(ParseEvent(e, r.roster));
      r.question.form = ParseQuestionJson(j.at("question"), r.roster);
      r.templates = j.at("templates").get<std::vector<std::string>>();
      auto take = [&](const std::string &suffix) {
        auto it = instances.find(id + suffix);
        if (it == instances.end()) ParseFail("instance " + id + suffix + " is missing");
        return it->second;
      };
      r.triple.baseline = take("-b");
      r.triple.intervention = take("-i");
      r.triple.control = take("-c");
      r.question.surface = r.triple.baseline.question;
      TripleMeta &meta = r.triple.meta;
      meta.question_type = j.at("question_type").get<std::string>();
      for (const json &c : j.at("sam_categories")) {
        auto category = ParseSamCategory(c.get<std::string>());
        if (!category) ParseFail("unknown SAM category " + c.dump());
        meta.sam_categories.push_back(*category);
      }
      meta.n_sam = j.at("n_sam").get<int>();
      meta.modified_sentences = j.at("modified_sentences").get<std::vector<std::size_t>>();
      set.triples.push_back(std::move(r));
    } catch (const json::exception &e) {
      ParseFail(std::string(kMetadataFile) + ": " + e.what());
    } catch (const std::logic_error &e) {
      ParseFail(std::string(kMetadataFile) + ": bad record: " + e.what());
    }
  }
  return set;
}

namespace {

std::vector<const MRCInstance *> Collect(const ChallengeSet &set,
                                         MRCInstance AlignedTriple::*member) {
  std::vector<const MRCInstance *> out;
  out.reserve(set.triples.size());
  for (const TripleRecord &r : set.triples) out.push_back(&(r.triple.*member));
  return out;
}

}  // namespace

std::vector<const MRCInstance *> Baselines(const ChallengeSet &set) {
  return Collect(set, &AlignedTriple::baseline);
}
std::vector<const MRCInstance *> Interventions(const ChallengeSet &set) {
  return Collect(set, &AlignedTriple::intervention);
}
std::vector<const MRCInstance *> Controls(const ChallengeSet &set) {
  return Collect(set, &AlignedTriple::control);
}

PassageStats CountPassage(std::string_view passage, std::span<const std::string> names) {
  const std::vector<Token> tokens = Tokenize(passage);
  if (tokens.empty()) throw Error(ErrorCode::kEmptyPassage, "passage has no words");
  PassageStats stats;
  stats.words = tokens.size();
  std::vector<std::string> words;
  for (const Token &t : tokens) words.push_back(Lowercase(StripEdgePunct(t.text)));
  for (const std::string &name : names) {
    if (!FindTokenSequence(words, NormalizedTokens(name)).empty()) ++stats.entities;
  }
  stats.numbers = static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [](const Token &t) { return HasDigit(t.text); }));
  return stats;
}

CorpusStats CorpusStatistics(const ChallengeSet &set) {
  if (set.triples.empty()) throw Error(ErrorCode::kEmptySet, "challenge set is empty");
  CorpusStats out;
  for (const TripleRecord &r : set.triples) {
    PassageStats s = CountPassage(r.triple.baseline.context, r.roster.names());
    out.words += static_cast<double>(s.words);
    out.entities += static_cast<double>(s.entities);
    out.numbers += static_cast<double>(s.numbers);
  }
  out.passages = set.triples.size();
  out.words /= static_cast<double>(out.passages);
  out.entities /= static_cast<double>(out.passages);
  out.numbers /= static_cast<double>(out.passages);
  return out;
}

}  // namespace samgen
