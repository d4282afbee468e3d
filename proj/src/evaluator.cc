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

#include "samgen/evaluator.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include <boost/math/distributions/normal.hpp>

#include "samgen/error.h"
#include "samgen/rng.h"
#include "samgen/text.h"

namespace samgen {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::size_t> Intersect(std::span<const std::size_t> a,
                                   std::span<const std::size_t> b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SubResult MakeSub(std::size_t triples, DiceCount count, double alpha) {
  SubResult out;
  out.triples = triples;
  out.count = count;
  if (count.basis > 0) {
    out.dice = count.Ratio();
    out.ci = CiHalfWidth(*out.dice, count.basis, alpha);
  }
  return out;
}

double LogChoose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

const std::string *Lookup(const PredictionSet &predictions, const std::string &id) {
  auto it = predictions.find(id);
  return it == predictions.end() ? nullptr : &it->second;
}

ordered_json SubJson(const SubResult &sub) {
  ordered_json out;
  out["triples"] = sub.triples;
  out["n_basis"] = sub.count.basis;
  out["dice"] = sub.dice ? ordered_json(*sub.dice) : ordered_json(nullptr);
  out["ci"] = sub.dice ? ordered_json(sub.ci) : ordered_json(nullptr);
  return out;
}

std::string Percent(std::optional<double> value, double ci) {
  if (!value) return "undefined (empty basis)";
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << *value * 100 << " +/- " << ci * 100;
  return out.str();
}

BaselinePredictions RunBaseline(const ChallengeSet &set, std::uint64_t seed, bool informed) {
  BaselinePredictions out;
  Rng rng(DeriveSeed(seed, informed ? "informed" : "random"));
  for (const TripleRecord &r : set.triples) {
    for (const MRCInstance *inst :
         {&r.triple.baseline, &r.triple.intervention, &r.triple.control}) {
      std::vector<std::string> pool = AnswerCandidates(inst->context, r.roster.names());
      if (informed) {
        const ExpectedAnswer expected = ExpectedAnswerType(inst->question);
        std::vector<std::string> typed;
        for (const std::string &c : pool) {
          bool keep = false;
          switch (expected) {
            case ExpectedAnswer::kPlayer: keep = !HasDigit(c); break;
            case ExpectedAnswer::kMinute:
              keep = HasDigit(c) && c.find("minute") != std::string::npos;
              break;
            case ExpectedAnswer::kDistance:
              keep = HasDigit(c) && c.find("metre") != std::string::npos;
              break;
            case ExpectedAnswer::kAny: keep = true; break;
          }
          if (keep) typed.push_back(c);
        }
        if (typed.empty()) {
          ++out.fallbacks;
        } else {
          pool = std::move(typed);
        }
      }
      out.predictions[inst->id] = pool.empty() ? std::string() : rng.Pick(pool);
    }
  }
  return out;
}

}  // namespace

PredictionSet ParsePredictions(std::string_view json_text) {
  PredictionSet out;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::kParse, "predictions must be a JSON object");
    for (const auto &[id, answer] : j.items()) {
      if (!answer.is_string()) {
        throw Error(ErrorCode::kParse, "prediction for " + id + " is not a string");
      }
      out[id] = answer.get<std::string>();
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("predictions: ") + e.what());
  }
  return out;
}

PredictionSet LoadPredictions(const std::filesystem::path &path) {
  return ParsePredictions(ReadFile(path));
}

std::string PredictionsJson(const PredictionSet &predictions) {
  ordered_json out = ordered_json::object();
  for (const auto &[id, answer] : predictions) out[id] = answer;
  return out.dump(1) + "\n";
}

void EvalConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (!(alpha > 0 && alpha < 1)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie strictly between 0 and 1");
  }
}

int RemK(std::string_view prediction, std::string_view gold, int k, bool char_level) {
  if (Tokenize(prediction).size() > static_cast<std::size_t>(k)) return 0;
  if (char_level) {
    const std::string g = Lowercase(gold);
    return !g.empty() && Lowercase(prediction).find(g) != std::string::npos ? 1 : 0;
  }
  const std::vector<std::string> needle = NormalizedTokens(gold);
  if (needle.empty()) return 0;
  return FindTokenSequence(NormalizedTokens(prediction), needle).empty() ? 0 : 1;
}

double NormalQuantile(double probability) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), probability);
}

double CiHalfWidth(double p, std::size_t n, double alpha) {
  if (n == 0) throw Error(ErrorCode::kEmptyBasis, "interval over an empty sample");
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorCode::kInvalidArgument, "alpha out of range");
  return NormalQuantile(1 - alpha / 2) * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

double DiceCount::Ratio() const {
  if (basis == 0) {
    throw Error(ErrorCode::kEmptyBasis,
                "no triple is solved on both baseline and control; DICE is undefined");
  }
  return static_cast<double>(consistent) / static_cast<double>(basis);
}

DiceCount CountDice(std::span<const std::size_t> b_plus, std::span<const std::size_t> i_plus,
                    std::span<const std::size_t> c_plus) {
  const std::vector<std::size_t> basis = Intersect(b_plus, c_plus);
  return {Intersect(basis, i_plus).size(), basis.size()};
}

double EvalResult::Dice() const { return count.Ratio(); }

EvalResult Evaluate(const ChallengeSet &set, const PredictionSet &predictions,
                    const EvalConfig &config) {
  config.Validate();
  EvalResult out;
  out.triples = set.triples.size();
  auto solved = [&](const MRCInstance &inst) {
    const std::string *prediction = Lookup(predictions, inst.id);
    if (prediction == nullptr) {
      ++out.missing;
      return false;
    }
    return RemK(*prediction, inst.answer, config.k, config.char_level) == 1;
  };
  for (std::size_t i = 0; i < set.triples.size(); ++i) {
    const AlignedTriple &t = set.triples[i].triple;
    if (solved(t.baseline)) out.b_plus.push_back(i);
    if (solved(t.intervention)) out.i_plus.push_back(i);
    if (solved(t.control)) out.c_plus.push_back(i);
  }
  out.count = CountDice(out.b_plus, out.i_plus, out.c_plus);
  if (out.count.basis > 0) {
    out.dice = out.count.Ratio();
    out.ci = CiHalfWidth(*out.dice, out.count.basis, config.alpha);
  }
  if (out.triples > 0) {
    const double n = static_cast<double>(out.triples);
    out.acc_b = static_cast<double>(out.b_plus.size()) / n;
    out.acc_i = static_cast<double>(out.i_plus.size()) / n;
    out.acc_c = static_cast<double>(out.c_plus.size()) / n;
  }

  // A triple counts towards every category it contains.
  std::map<std::string, std::vector<std::size_t>> by_category;
  std::map<int, std::vector<std::size_t>> by_n_sam;
  for (std::size_t i = 0; i < set.triples.size(); ++i) {
    const TripleMeta &meta = set.triples[i].triple.meta;
    std::set<SamCategory> present(meta.sam_categories.begin(), meta.sam_categories.end());
    for (SamCategory c : present) by_category[std::string(SamCategoryName(c))].push_back(i);
    by_n_sam[meta.n_sam].push_back(i);
  }
  auto restrict = [&](const std::vector<std::size_t> &subset) {
    return MakeSub(subset.size(),
                   CountDice(Intersect(out.b_plus, subset), Intersect(out.i_plus, subset),
                             Intersect(out.c_plus, subset)),
                   config.alpha);
  };
  for (const auto &[name, subset] : by_category) out.by_category[name] = restrict(subset);
  for (const auto &[n, subset] : by_n_sam) out.by_n_sam[n] = restrict(subset);

  try {
    out.error_analysis = AnalyseErrors(set, predictions, config);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kEmptySet) throw;
  }
  return out;
}

ErrorAnalysis AnalyseErrors(const ChallengeSet &set, const PredictionSet &predictions,
                            const EvalConfig &config) {
  config.Validate();
  ErrorAnalysis out;
  auto solved = [&](const MRCInstance &inst, const std::string &gold) {
    const std::string *prediction = Lookup(predictions, inst.id);
    return prediction != nullptr &&
           RemK(*prediction, gold, config.k, config.char_level) == 1;
  };
  for (const TripleRecord &r : set.triples) {
    const AlignedTriple &t = r.triple;
    if (!solved(t.baseline, t.baseline.answer) || !solved(t.control, t.control.answer) ||
        solved(t.intervention, t.intervention.answer)) {
      continue;
    }
    ++out.cases;
    if (solved(t.intervention, t.baseline.answer)) ++out.copies;
  }
  if (out.cases == 0) {
    throw Error(ErrorCode::kEmptySet, "no triple fails only on the intervention");
  }
  out.fraction = static_cast<double>(out.copies) / static_cast<double>(out.cases);
  out.ci = CiHalfWidth(out.fraction, out.cases, config.alpha);
  return out;
}

FisherResult FisherExact(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  // Canonical row order.
  if (std::tie(c, d) < std::tie(a, b)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  const std::uint64_t row1 = a + b;
  const std::uint64_t row2 = c + d;
  const std::uint64_t col1 = a + c;
  const std::uint64_t col2 = b + d;
  const std::uint64_t n = row1 + row2;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) return {1.0, true};
  auto log_p = [&](std::uint64_t x) {
    return LogChoose(row1, x) + LogChoose(row2, col1 - x) - LogChoose(n, col1);
  };
  const double observed = log_p(a);
  const std::uint64_t lo = col1 > row2 ? col1 - row2 : 0;
  const std::uint64_t hi = std::min(row1, col1);
  double p = 0;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    const double lp = log_p(x);
    if (lp <= observed + 1e-7) p += std::exp(lp);
  }
  return {std::min(p, 1.0), false};
}

FisherResult FisherCompare(const EvalResult &a, const EvalResult &b) {
  return FisherExact(a.count.consistent, a.count.basis - a.count.consistent,
                     b.count.consistent, b.count.basis - b.count.consistent);
}

SubResult MicroAverage(std::span<const EvalResult> results, double alpha) {
  DiceCount pooled;
  std::size_t triples = 0;
  for (const EvalResult &r : results) {
    pooled.consistent += r.count.consistent;
    pooled.basis += r.count.basis;
    triples += r.triples;
  }
  return MakeSub(triples, pooled, alpha);
}

std::vector<std::string> AnswerCandidates(std::string_view passage,
                                          std::span<const std::string> roster) {
  std::vector<Mention> mentions;
  const std::vector<Token> tokens = Tokenize(passage);
  std::vector<std::string> words;
  for (const Token &t : tokens) words.push_back(Lowercase(StripEdgePunct(t.text)));
  for (const std::string &name : roster) {
    const std::vector<std::size_t> hits = FindTokenSequence(words, NormalizedTokens(name));
    if (!hits.empty()) mentions.push_back({name, tokens[hits.front()].offset});
  }
  for (Mention &m : FindNumbers(passage)) mentions.push_back(std::move(m));
  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const Mention &x, const Mention &y) { return x.offset < y.offset; });
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const Mention &m : mentions) {
    if (seen.insert(m.text).second) out.push_back(m.text);
  }
  return out;
}

ExpectedAnswer ExpectedAnswerType(std::string_view question) {
  const std::string q = Lowercase(question);
  if (q.starts_with("who")) return ExpectedAnswer::kPlayer;
  if (q.starts_with("when")) return ExpectedAnswer::kMinute;
  if (q.starts_with("from how far") || q.starts_with("how far")) {
    return ExpectedAnswer::kDistance;
  }
  return ExpectedAnswer::kAny;
}

BaselinePredictions RandomBaseline(const ChallengeSet &set, std::uint64_t seed) {
  return RunBaseline(set, seed, false);
}

BaselinePredictions InformedBaseline(const ChallengeSet &set, std::uint64_t seed) {
  return RunBaseline(set, seed, true);
}

ordered_json EvalJson(const EvalResult &result) {
  ordered_json out;
  out["dice"] = result.dice ? ordered_json(*result.dice) : ordered_json(nullptr);
  out["ci"] = result.dice ? ordered_json(result.ci) : ordered_json(nullptr);
  out["n_basis"] = result.count.basis;
  out["acc_b"] = result.acc_b;
  out["acc_i"] = result.acc_i;
  out["acc_c"] = result.acc_c;
  ordered_json categories = ordered_json::object();
  for (const auto &[name, sub] : result.by_category) categories[name] = SubJson(sub);
  out["by_category"] = categories;
  ordered_json counts = ordered_json::object();
  for (const auto &[n, sub] : result.by_n_sam) counts[std::to_string(n)] = SubJson(sub);
  out["by_n_sam"] = counts;
  if (result.error_analysis) {
    ordered_json errors;
    errors["cases"] = result.error_analysis->cases;
    errors["baseline_copies"] = result.error_analysis->copies;
    errors["fraction"] = result.error_analysis->fraction;
    errors["ci"] = result.error_analysis->ci;
    out["error_analysis"] = errors;
  } else {
    out["error_analysis"] = nullptr;
  }
  out["triples"] = result.triples;
  out["missing_predictions"] = result.missing;
  return out;
}

std::string EvalTable(const EvalResult &result) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "triples          " << result.triples << "\n";
  out << "accuracy B/I/C   " << result.acc_b * 100 << " / " << result.acc_i * 100 << " / "
      << result.acc_c * 100 << "\n";
  out << "basis |B+ & C+|  " << result.count.basis << "\n";
  out << "DICE             " << Percent(result.dice, result.ci) << "\n";
  if (result.missing > 0) out << "missing          " << result.missing << "\n";
  if (!result.by_category.empty()) {
    out << "by category (a triple counts for every category it contains)\n";
    for (const auto &[name, sub] : result.by_category) {
      out << "  " << name << "  n=" << sub.triples << "  basis=" << sub.count.basis
          << "  DICE " << Percent(sub.dice, sub.ci) << "\n";
    }
  }
  if (!result.by_n_sam.empty()) {
    out << "by number of modifications\n";
    for (const auto &[n, sub] : result.by_n_sam) {
      out << "  " << n << "  n=" << sub.triples << "  basis=" << sub.count.basis << "  DICE "
          << Percent(sub.dice, sub.ci) << "\n";
    }
  }
  if (result.error_analysis) {
    out << "baseline answer on failed interventions  "
        << Percent(result.error_analysis->fraction, result.error_analysis->ci) << " of "
        << result.error_analysis->cases << "\n";
  }
  return out.str();
}

}  // namespace samgen
