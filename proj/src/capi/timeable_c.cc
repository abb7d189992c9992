// Copyright 2026 The Timeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "timeable/timeable.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "timeable/agenda_lab.h"
#include "timeable/chain.h"
#include "timeable/documents.h"
#include "timeable/errors.h"
#include "timeable/exact_timing.h"
#include "timeable/families.h"
#include "timeable/perception.h"
#include "timeable/randomized_timing.h"
#include "timeable/timed_game.h"

struct tmb_game {
  timeable::Game game;
};

namespace {

using timeable::Error;
using timeable::ErrorCode;
using timeable::Game;
using timeable::Rational;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

tmb_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return TMB_ERR_PARSE;
    case ErrorCode::kInvalid:
      return TMB_ERR_INVALID;
    case ErrorCode::kBudget:
      return TMB_ERR_BUDGET;
    case ErrorCode::kArgument:
      return TMB_ERR_ARGUMENT;
  }
  return TMB_ERR_INTERNAL;
}

template <typename F>
tmb_status Guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TMB_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TMB_ERR_INTERNAL;
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Put(char** out, const std::string& s) {
  timeable::Require(out != nullptr, "output pointer is null");
  *out = Copy(s);
}

const Game& GameOf(const tmb_game* game) {
  timeable::Require(game != nullptr, "game handle is null");
  return game->game;
}

std::string_view Text(const char* s, const char* what) {
  timeable::Require(s != nullptr, std::string(what) + " is null");
  return s;
}

Rational RationalArg(const char* s, const char* what) {
  return timeable::ParseRational(Text(s, what));
}

std::size_t Budget(std::uint64_t budget) {
  return budget == 0 ? timeable::kDefaultBudget
                     : static_cast<std::size_t>(budget);
}

std::string Emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* tmb_version(void) { return "1.0.0"; }

const char* tmb_last_error(void) { return last_error.c_str(); }

void tmb_string_free(char* s) { std::free(s); }

tmb_status tmb_game_parse(const char* text, tmb_game** out) {
  return Guard([&] {
    timeable::Require(out != nullptr, "output pointer is null");
    *out = new tmb_game{timeable::ParseGame(Text(text, "game text"))};
    return TMB_OK;
  });
}

void tmb_game_free(tmb_game* game) { delete game; }

tmb_status tmb_game_serialize(const tmb_game* game, char** out) {
  return Guard([&] {
    Put(out, timeable::SerializeGame(GameOf(game)));
    return TMB_OK;
  });
}

tmb_status tmb_game_digest(const tmb_game* game, char** out) {
  return Guard([&] {
    Put(out, timeable::GameDigest(GameOf(game)));
    return TMB_OK;
  });
}

int tmb_game_num_nodes(const tmb_game* game) {
  return game == nullptr ? -1 : game->game.num_nodes();
}

int tmb_game_num_infosets(const tmb_game* game) {
  return game == nullptr ? -1 : game->game.num_infosets();
}

tmb_status tmb_game_validate(const tmb_game* game, char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    Put(report, timeable::ValidationJson(g, timeable::Validate(g)));
    return TMB_OK;
  });
}

tmb_status tmb_check(const tmb_game* game, char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const timeable::ContractedGraph graph = timeable::ContractInfosets(g);
    const auto cycle = timeable::FindCycle(graph);
    Json doc;
    doc["exact"] = !cycle.has_value();
    doc["vertices"] = graph.num_vertices;
    doc["edges"] = graph.num_edges();
    if (cycle) {
      Json names = Json::array();
      for (int v : *cycle) names.push_back(graph.Name(g, v));
      names.push_back(graph.Name(g, cycle->front()));
      doc["cycle"] = std::move(names);
    } else {
      const auto timing = timeable::ExactDeterministicTiming(g);
      doc["timing"] = Json::parse(timeable::SerializeTiming(g, *timing));
    }
    Put(report, Emit(doc));
    return cycle ? TMB_NEGATIVE : TMB_OK;
  });
}

tmb_status tmb_exact_timing(const tmb_game* game, char** timing) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto t = timeable::ExactDeterministicTiming(g);
    if (!t) {
      last_error = "not exactly timeable: the contracted graph has a cycle";
      return TMB_NEGATIVE;
    }
    Put(timing, timeable::SerializeTiming(g, *t));
    return TMB_OK;
  });
}

tmb_status tmb_dot(const tmb_game* game, char** dot) {
  return Guard([&] {
    const Game& g = GameOf(game);
    if (const auto t = timeable::ExactDeterministicTiming(g)) {
      Put(dot, timeable::LayoutDot(g, *t));
      return TMB_OK;
    }
    const timeable::ContractedGraph graph = timeable::ContractInfosets(g);
    Put(dot, timeable::ContractionDot(g, graph, *timeable::FindCycle(graph)));
    return TMB_NEGATIVE;
  });
}

tmb_status tmb_window_timing(const tmb_game* game, int n, char** timing) {
  return Guard([&] {
    const Game& g = GameOf(game);
    Put(timing, timeable::SerializeRandomizedTiming(
                    g, timeable::ShiftedWindowTiming(g, n)));
    return TMB_OK;
  });
}

tmb_status tmb_delay_timing(const tmb_game* game, const char* eps,
                            char** timing) {
  return Guard([&] {
    const Game& g = GameOf(game);
    Put(timing, timeable::SerializeRandomizedTiming(
                    g, timeable::DelayTiming(g, RationalArg(eps, "eps"))));
    return TMB_OK;
  });
}

tmb_status tmb_chain_timing(const tmb_game* game, const char* chain,
                            uint64_t budget, char** timing) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto cd = timeable::ParseChain(Text(chain, "chain"));
    Put(timing, timeable::SerializeRandomizedTiming(
                    g, timeable::TimingFromChain(g, cd, Budget(budget))));
    return TMB_OK;
  });
}

tmb_status tmb_indist_chain(int n, int k, const char* const* spreads,
                            size_t num_spreads, uint64_t budget,
                            char** chain) {
  return Guard([&] {
    timeable::ChainDistribution cd = timeable::IndistBase(n, k);
    for (size_t i = 0; i < num_spreads; ++i) {
      timeable::Require(spreads != nullptr, "spreads is null");
      const Rational b = RationalArg(spreads[i], "spread");
      timeable::Require(timeable::IsInteger(b), "spread must be an integer");
      cd = timeable::IndistRecursive(cd, b.get_num(), Budget(budget));
    }
    Put(chain, timeable::SerializeChain(cd));
    return TMB_OK;
  });
}

tmb_status tmb_verify_timing(const tmb_game* game, const char* timing,
                             const char* eps, uint64_t budget,
                             char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto rt = timeable::ParseRandomizedTiming(g, Text(timing, "timing"));
    const auto result = timeable::VerifyEpsilonTiming(g, rt, Budget(budget));
    Json doc = Json::parse(timeable::EpsilonJson(g, result));
    doc["leak_free"] = timeable::FormatRational(
        timeable::LeakFreeProbability(g, rt, Budget(budget)));
    tmb_status status = TMB_OK;
    if (eps != nullptr) {
      const Rational bound = RationalArg(eps, "eps");
      doc["eps"] = timeable::FormatRational(bound);
      doc["within"] = result.achieved <= bound;
      if (result.achieved > bound) status = TMB_NEGATIVE;
    }
    Put(report, Emit(doc));
    return status;
  });
}

tmb_status tmb_estimate_timing(const tmb_game* game, const char* source,
                               int is_chain, uint64_t seed, uint64_t samples,
                               char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    std::unique_ptr<timeable::TimingSampler> sampler;
    if (is_chain) {
      sampler = timeable::ChainSampler(g, timeable::ParseChain(Text(source, "chain")));
    } else {
      sampler = timeable::AtomSampler(
          timeable::ParseRandomizedTiming(g, Text(source, "timing")));
    }
    Put(report, timeable::EstimateJson(
                    g, timeable::EstimateEpsilonTiming(g, *sampler, seed,
                                                       samples)));
    return TMB_OK;
  });
}

tmb_status tmb_tv(const char* dist_a, const char* dist_b, char** value) {
  return Guard([&] {
    const auto a = timeable::ParseDistribution(Text(dist_a, "distribution"));
    const auto b = timeable::ParseDistribution(Text(dist_b, "distribution"));
    Put(value, timeable::FormatRational(timeable::TvDistance(a, b)));
    return TMB_OK;
  });
}

tmb_status tmb_subset_tv(const char* chain, int m, char** report) {
  return Guard([&] {
    const auto cd = timeable::ParseChain(Text(chain, "chain"));
    const auto result = timeable::VerifyIndistinguishableSubsets(cd, m);
    Json doc;
    doc["achieved"] = timeable::FormatRational(result.achieved);
    doc["subsets"] = Json::array({result.subset_a, result.subset_b});
    doc["max_value"] = cd.MaxValue().get_str();
    Put(report, Emit(doc));
    return TMB_OK;
  });
}

tmb_status tmb_augment(const tmb_game* game, const char* timing,
                       uint64_t budget, char** augmented) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto rt = timeable::ParseRandomizedTiming(g, Text(timing, "timing"));
    const auto result = timeable::Augment(g, rt, Budget(budget));
    Json doc = Json::parse(timeable::SerializeGame(result.game));
    Json provenance;
    provenance["game"] = timeable::GameDigest(g);
    provenance["atoms"] = rt.atoms.size();
    doc["provenance"] = std::move(provenance);
    Put(augmented, Emit(doc));
    return TMB_OK;
  });
}

tmb_status tmb_advantage(const tmb_game* game, const char* timing, int player,
                         const char* profile, uint64_t budget, char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    timeable::Require(player >= 1 && player <= g.num_players(),
                      "player out of range");
    const auto rt = timeable::ParseRandomizedTiming(g, Text(timing, "timing"));
    const timeable::BehaviorProfile others =
        profile == nullptr ? timeable::UniformProfile(g, player)
                           : timeable::ParseProfile(profile);
    const auto result =
        timeable::TimingAdvantage(g, rt, player, others, Budget(budget));
    Put(report, timeable::AdvantageJson(result));
    return result.holds ? TMB_OK : TMB_NEGATIVE;
  });
}

tmb_status tmb_family(const char* kind, const int* params, size_t num_params,
                      char** document, char** text) {
  return Guard([&] {
    const std::string k(Text(kind, "kind"));
    auto param = [&](size_t i) {
      timeable::Require(params != nullptr && i < num_params,
                        "family " + k + " needs more parameters");
      return params[i];
    };
    std::string doc;
    std::optional<std::string> line;
    if (k == "figure1") {
      const int variant = param(0);
      timeable::Require(variant >= 0 && variant <= 2, "variant must be 0..2");
      doc = timeable::SerializeGame(
          timeable::Figure1(static_cast<char>('a' + variant)));
    } else if (k == "guessing") {
      doc = timeable::SerializeGame(timeable::GuessingGame(param(0), param(1)));
    } else if (k == "agenda-ar" || k == "perception") {
      const auto agenda = k == "agenda-ar" ? timeable::AgendaAr(param(0))
                                           : timeable::PerceptionGame(param(0));
      doc = timeable::SerializeAgenda(agenda);
      line = agenda.ToString();
    } else if (k == "gamma-r" || k == "choiceless") {
      timeable::SymmetricChoicelessGame scg;
      if (k == "gamma-r") {
        scg = timeable::GammaR(param(0));
      } else {
        timeable::Require(num_params > 0, "empty sequence");
        for (size_t i = 0; i < num_params; ++i) {
          scg.seq.push_back(params[i]);
          scg.n = std::max(scg.n, params[i]);
        }
        timeable::CheckChoiceless(scg);
      }
      doc = timeable::SerializeChoiceless(scg);
      std::string s;
      for (int p : scg.seq) {
        if (!s.empty() && scg.n > 9) s += ' ';
        s += std::to_string(p);
      }
      line = s;
    } else {
      timeable::Fail(ErrorCode::kArgument, "unknown family \"" + k + "\"");
    }
    Put(document, doc);
    if (text != nullptr) *text = line ? Copy(*line) : nullptr;
    return TMB_OK;
  });
}

tmb_status tmb_expand_choiceless(const char* choiceless, uint64_t limit,
                                 char** game) {
  return Guard([&] {
    const auto scg = timeable::ParseChoiceless(Text(choiceless, "game"));
    Put(game, timeable::SerializeGame(timeable::ExpandChoiceless(
                  scg, limit == 0 ? timeable::kDefaultPermutationLimit
                                  : static_cast<std::size_t>(limit))));
    return TMB_OK;
  });
}

tmb_status tmb_verify_agenda(const char* agenda, const char* timing,
                             const char* eps, const char* lambda,
                             char** report) {
  return Guard([&] {
    const auto a = timeable::ParseAgenda(Text(agenda, "agenda"));
    const auto t = timeable::ParseAgendaTiming(a, Text(timing, "timing"));
    const auto result = timeable::VerifyAgendaTiming(
        a, t, RationalArg(eps, "eps"), RationalArg(lambda, "lambda"));
    Put(report, timeable::AgendaReportJson(result));
    return result.verdict ? TMB_OK : TMB_NEGATIVE;
  });
}

tmb_status tmb_shift_agenda(const char* agenda, const char* timing,
                            const char* lambda, const char* n,
                            char** shifted) {
  return Guard([&] {
    const auto a = timeable::ParseAgenda(Text(agenda, "agenda"));
    const auto t = timeable::ParseAgendaTiming(a, Text(timing, "timing"));
    const auto out = timeable::ShiftNonneg(a, t, RationalArg(lambda, "lambda"),
                                           RationalArg(n, "n"));
    Put(shifted, timeable::SerializeAgendaTiming(a, out));
    return TMB_OK;
  });
}

tmb_status tmb_gap_ratios(const char* agenda, const char* timing, int c,
                          char** report) {
  return Guard([&] {
    const auto a = timeable::ParseAgenda(Text(agenda, "agenda"));
    const auto t = timeable::ParseAgendaTiming(a, Text(timing, "timing"));
    const auto r = timeable::PerceptionGapRatios(a, t, c);
    Json doc;
    doc["late_second"] = timeable::FormatRational(r.late_second);
    doc["early_third"] = timeable::FormatRational(r.early_third);
    doc["both"] = timeable::FormatRational(r.both);
    Put(report, Emit(doc));
    return TMB_OK;
  });
}

tmb_status tmb_symmetrize(const char* choiceless, const char* timing,
                          uint64_t limit, char** symmetric, char** report) {
  return Guard([&] {
    const auto scg = timeable::ParseChoiceless(Text(choiceless, "game"));
    const auto t = timeable::ParseSymmetricTiming(Text(timing, "timing"));
    const auto out = timeable::Symmetrize(
        scg, t,
        limit == 0 ? timeable::kDefaultPermutationLimit
                   : static_cast<std::size_t>(limit));
    Put(symmetric, timeable::SerializeSymmetricTiming(out));
    if (report != nullptr) {
      Json doc;
      doc["input"] = timeable::FormatRational(
          timeable::ChoicelessAchievedEpsilon(scg, t));
      doc["output"] = timeable::FormatRational(
          timeable::ChoicelessAchievedEpsilon(scg, out));
      doc["symmetric"] = timeable::IsSymmetric(out);
      *report = Copy(Emit(doc));
    }
    return TMB_OK;
  });
}

tmb_status tmb_lu_time(const tmb_game* game, const char* lower,
                       const char* upper, char** timing) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto pt = timeable::ConstructLuTiming(
        g, timeable::ClockBound::Parse(Text(lower, "lower bound")),
        timeable::ClockBound::Parse(Text(upper, "upper bound")));
    Put(timing, timeable::SerializePerceivedTiming(g, pt));
    return TMB_OK;
  });
}

tmb_status tmb_verify_lu(const tmb_game* game, const char* timing,
                         const char* lower, const char* upper, const char* eps,
                         uint64_t budget, char** report) {
  return Guard([&] {
    const Game& g = GameOf(game);
    const auto pt = timeable::ParsePerceivedTiming(g, Text(timing, "timing"));
    const auto result = timeable::VerifyLuTiming(
        g, pt, timeable::ClockBound::Parse(Text(lower, "lower bound")),
        timeable::ClockBound::Parse(Text(upper, "upper bound")),
        Budget(budget));
    const Rational bound = eps == nullptr ? Rational(0) : RationalArg(eps, "eps");
    Json doc = Json::parse(timeable::LuReportJson(g, result));
    doc["eps"] = timeable::FormatRational(bound);
    Put(report, Emit(doc));
    return result.structural_ok && result.achieved <= bound ? TMB_OK
                                                            : TMB_NEGATIVE;
  });
}

}  // extern "C"
