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

// Acceptance runner. Prints one PASS/FAIL line per criterion; the exit
// status is nonzero when any selected criterion fails.
//
//   acceptance            run every criterion
//   acceptance 3 7        run the listed criteria

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.h"
#include "timeable/agenda_lab.h"
#include "timeable/chain.h"
#include "timeable/distribution.h"
#include "timeable/errors.h"
#include "timeable/exact_timing.h"
#include "timeable/families.h"
#include "timeable/perception.h"
#include "timeable/randomized_timing.h"
#include "timeable/timed_game.h"

namespace timeable {
namespace {

using testing::GameOptions;
using testing::RandInt;
using testing::RandomGame;
using testing::Rng;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const Rational& q) { return FormatRational(q); }

void Criterion1(Verdict& out) {
  const auto start = Clock::now();
  const Game a = Figure1('a');
  const ContractedGraph ga = ContractInfosets(a);
  const auto cycle_a = FindCycle(ga);
  out.Expect(cycle_a && cycle_a->size() == 2, "figure1(a) has a 2-cycle");
  if (cycle_a) {
    out.Expect(ga.Name(a, (*cycle_a)[0]) == "P1-set" &&
                   ga.Name(a, (*cycle_a)[1]) == "P2-set",
               "figure1(a) cycle is [P1-set, P2-set]");
  }
  const Game b = Figure1('b');
  const auto tb = ExactDeterministicTiming(b);
  out.Expect(tb.has_value(), "figure1(b) is exactly timeable");
  if (tb) {
    bool layered = (*tb).times[b.root()] == 0;
    for (NodeIndex v = 0; v < b.num_nodes(); ++v) {
      if (!b.is_decision(v)) continue;
      const bool first = b.infoset_name(b.infoset_of(v)) == "P1-set";
      layered = layered && (*tb).times[v] == (first ? 1 : 2);
    }
    out.Expect(layered, "figure1(b) timing is 0/1/2");
  }
  out.Expect(!ExactDeterministicTiming(Figure1('c')),
             "figure1(c) is not exactly timeable");
  const double t = Seconds(start);
  out.Expect(t < 1.0, "under 1 s");
  out.detail << "a: cycle [P1-set -> P2-set], b: 0/1/2, c: cycle; " << t
             << " s";
}

void Criterion2(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(2024);
  GameOptions opt;
  opt.max_nodes = 28;
  opt.max_depth = 5;
  int agree = 0, timeable = 0, exhaustive = 0, games = 0;
  while (games < 1000) {
    opt.merge_rate = 0.2 + 0.6 * (games % 4) / 3.0;
    opt.perfect_recall = games % 5 == 0;
    const Game g = RandomGame(rng, opt);
    if (g.num_infosets() > 12 || g.num_infosets() == 0) continue;
    ++games;
    const ContractedGraph graph = ContractInfosets(g);
    const bool acyclic = !FindCycle(graph).has_value();
    bool ok = testing::RelaxationOracle(g).has_value() == acyclic;
    if (graph.num_vertices <= 8) {
      ++exhaustive;
      ok = ok && testing::ExhaustiveExactTimingExists(g, graph.num_vertices) ==
                     acyclic;
    }
    if (acyclic) {
      ++timeable;
      const auto t = ExactDeterministicTiming(g);
      ok = ok && t && CheckTiming(g, *t).empty() && IsExact(g, *t);
    }
    agree += ok;
  }
  const double t = Seconds(start);
  out.Expect(agree == games, "all verdicts agree with the search oracles");
  out.Expect(timeable > 100 && games - timeable > 100,
             "corpus mixes both verdicts");
  out.Expect(t < 60, "under 60 s");
  out.detail << agree << "/" << games << " agree (" << timeable
             << " timeable, " << exhaustive
             << " also checked by exhaustive search); " << t << " s";
}

double TimeCheck(const Game& g) {
  const auto start = Clock::now();
  const ContractedGraph graph = ContractInfosets(g);
  const bool cyclic = FindCycle(graph).has_value();
  const double t = Seconds(start);
  return cyclic ? -1 : t;
}

void Criterion3(Verdict& out) {
  const Game small = testing::PathGame(100001);
  const Game large = testing::PathGame(1000001);
  double ts = 1e9, tl = 1e9;
  for (int i = 0; i < 11; ++i) {
    ts = std::min(ts, TimeCheck(small));
    tl = std::min(tl, TimeCheck(large));
    ts = std::min(ts, TimeCheck(small));
  }
  out.Expect(ts > 0 && tl > 0, "path games are acyclic");
  const double ratio = tl / ts;
  out.Expect(ratio >= 8 && ratio <= 12, "runtime ratio within 8x-12x");
  out.Expect(tl < 2.0, "under 2 s at 1e6 nodes");
  out.detail << "best of 22/11 runs, 1e5: " << ts * 1e3 << " ms, 1e6: "
             << tl * 1e3 << " ms, ratio " << ratio;
}

void Criterion4(Verdict& out) {
  const auto start = Clock::now();
  const Game g = Figure1('a');
  for (int n : {4, 8, 16, 100}) {
    const RandomizedTiming rt = ShiftedWindowTiming(g, n);
    const Rational eps = VerifyEpsilonTiming(g, rt).achieved;
    const Rational leak = LeakFreeProbability(g, rt);
    out.Expect(eps == Rational(1, n - 1), "epsilon at N=" + std::to_string(n));
    out.Expect(leak == Fraction(n - 3, n - 1),
               "no-leak probability at N=" + std::to_string(n));
    out.detail << "N=" << n << ": eps " << Fmt(eps) << ", no-leak "
               << Fmt(leak) << "; ";
  }
  const double t = Seconds(start);
  out.Expect(t < 5, "under 5 s");
  out.detail << t << " s";
}

void Criterion5(Verdict& out) {
  const auto start = Clock::now();
  struct Row {
    int m, k;
    Rational eps;
  };
  for (const Row& row : {Row{1, 2, Rational(1, 2)}, Row{2, 2, Rational(1, 4)},
                         Row{2, 3, Rational(1, 4)}}) {
    const Game g = GuessingGame(row.m, row.k);
    const AdvantageReport r =
        TimingAdvantage(g, DelayTiming(g, row.eps), 1, BehaviorProfile{});
    const Rational stay = Pow(1 - row.eps, row.m);
    const Rational want = (1 - stay) + stay / row.k;
    const std::string tag = "(" + std::to_string(row.m) + "," +
                            std::to_string(row.k) + "," + Fmt(row.eps) + ")";
    out.Expect(r.plain == Rational(1, row.k), "plain value " + tag);
    out.Expect(r.augmented == want, "augmented value " + tag);
    out.Expect(r.achieved <= row.eps, "delay epsilon " + tag);
    out.Expect(r.gain <= row.m * r.achieved, "gain bound " + tag);
    out.detail << tag << ": plain " << Fmt(r.plain) << ", augmented "
               << Fmt(r.augmented) << ", eps " << Fmt(r.achieved) << "; ";
  }
  const double t = Seconds(start);
  out.Expect(t < 30, "under 30 s");
  out.detail << t << " s";
}

void Criterion6(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(606);
  GameOptions opt;
  opt.perfect_recall = true;
  opt.max_nodes = 30;
  opt.max_depth = 5;
  int violations = 0, positive = 0;
  Rational worst_slack = 1;
  for (int i = 0; i < 200; ++i) {
    opt.merge_rate = 0.5 + 0.4 * (i % 2);
    opt.players = 2 + i % 2;
    const Game g = i % 4 == 0
                       ? GuessingGame(RandInt(rng, 1, 3), RandInt(rng, 2, 3))
                       : RandomGame(rng, opt);
    const RandomizedTiming rt =
        testing::RandomRandomizedTiming(rng, g, RandInt(rng, 2, 4), 3);
    const int p = RandInt(rng, 1, g.num_players());
    const AdvantageReport r =
        TimingAdvantage(g, rt, p, testing::RandomProfile(rng, g, p));
    if (!(r.gain <= r.max_nodes * r.achieved)) ++violations;
    if (r.gain > 0) {
      ++positive;
      worst_slack = std::min<Rational>(worst_slack, r.bound - r.gain);
    }
  }
  const double t = Seconds(start);
  out.Expect(violations == 0, "no bound violations");
  out.Expect(t < 300, "under 5 min");
  out.Expect(positive >= 40, "at least 40 instances with a positive gain");
  out.detail << "200 games, " << violations << " violations, " << positive
             << " with positive gain (smallest slack " << Fmt(worst_slack)
             << "); " << t << " s";
}

Distribution Coordinate(const Distribution& d, int i) {
  return Pushforward(d, [i](const Outcome& x) { return Outcome{x[i]}; });
}

void Criterion7(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(707);
  int dpi = 0, mix = 0, mix_eq = 0, gap = 0, cond = 0;
  for (int i = 0; i < 500; ++i) {
    // Data processing.
    const int arity = RandInt(rng, 1, 2);
    const Distribution a = testing::RandomDistribution(rng, arity, 6, 0, 4);
    const Distribution b = testing::RandomDistribution(rng, arity, 6, 0, 4);
    std::map<Outcome, Rational> table;
    const auto f = [&](const Outcome& x) {
      auto it = table.find(x);
      if (it == table.end()) {
        it = table.emplace(x, Rational(RandInt(rng, 0, 2))).first;
      }
      return Outcome{it->second};
    };
    dpi += TvDistance(Pushforward(a, f), Pushforward(b, f)) <= TvDistance(a, b);

    // Mixtures, overlapping and with disjoint part supports.
    const int parts = RandInt(rng, 2, 4);
    const auto w = testing::RandomWeights(rng, parts);
    std::vector<Distribution> pa, pb, da, db;
    Rational bound = 0, disjoint_sum = 0;
    for (int k = 0; k < parts; ++k) {
      pa.push_back(testing::RandomDistribution(rng, 1, 4, 0, 5));
      pb.push_back(testing::RandomDistribution(rng, 1, 4, 0, 5));
      bound += w[k] * TvDistance(pa[k], pb[k]);
      const auto shift = [k](const Outcome& x) {
        return Outcome{x[0] + 100 * k};
      };
      da.push_back(Pushforward(pa[k], shift));
      db.push_back(Pushforward(pb[k], shift));
      disjoint_sum += w[k] * TvDistance(da[k], db[k]);
    }
    mix += TvDistance(Mixture(w, pa), Mixture(w, pb)) <= bound;
    mix_eq += TvDistance(Mixture(w, da), Mixture(w, db)) == disjoint_sum;

    // Mean gap over a common interval.
    for (;;) {
      const int hi = RandInt(rng, 2, 8);
      const Distribution x = testing::RandomDistribution(rng, 1, 4, 0, hi);
      const Distribution y = testing::RandomDistribution(rng, 1, 4, hi / 2, hi);
      if (Expectation(y) < Expectation(x) + 1) continue;
      Rational lo = x.support().begin()->first[0];
      Rational top = x.support().rbegin()->first[0];
      lo = std::min(lo, y.support().begin()->first[0]);
      top = std::max(top, y.support().rbegin()->first[0]);
      gap += TvDistance(x, y) >= 1 / (top - lo);
      break;
    }

    // Conditioning on an event of probability 1 - eps.
    for (;;) {
      const Distribution joint = testing::RandomDistribution(rng, 3, 8, 0, 3);
      const Distribution flagged = Pushforward(joint, [](const Outcome& x) {
        return Outcome{x[0], x[1], Rational(x[2] == 0 ? 0 : 1)};
      });
      const Rational eps =
          Pushforward(flagged, [](const Outcome& x) { return Outcome{x[2]}; })
              .Prob({Rational(0)});
      if (eps >= 1) continue;
      const Rational delta =
          TvDistance(Coordinate(flagged, 0), Coordinate(flagged, 1));
      const auto keep = [](int i) {
        return [i](const Outcome& x) { return Outcome{x[i], x[2]}; };
      };
      const Distribution c1 = Condition(Pushforward(flagged, keep(0)), 1);
      const Distribution c2 = Condition(Pushforward(flagged, keep(1)), 1);
      cond += TvDistance(c1, c2) <= (delta + eps) / (1 - eps);
      break;
    }
  }
  const double t = Seconds(start);
  out.Expect(dpi == 500, "data processing");
  out.Expect(mix == 500 && mix_eq == 500, "mixture bound and equality");
  out.Expect(gap == 500, "mean-gap bound");
  out.Expect(cond == 500, "conditioning bound");
  out.Expect(t < 60, "under 60 s");
  out.detail << "data processing " << dpi << "/500, mixture " << mix
             << "/500 (disjoint equality " << mix_eq << "/500), mean gap "
             << gap << "/500, conditioning " << cond << "/500; " << t << " s";
}

Rational MeasuredSubsetEpsilon(const ChainDistribution& cd) {
  Rational best = 0;
  for (int m = 1; m < cd.arity(); ++m) {
    best = std::max(best, VerifyIndistinguishableSubsets(cd, m).achieved);
  }
  return best;
}

void Criterion8(Verdict& out) {
  const auto start = Clock::now();
  bool base_ok = true;
  for (int n = 2; n <= 64; ++n) {
    const ChainDistribution cd = IndistBase(n, 1);
    const Distribution d = cd.Materialize();
    const Rational oracle = TvDistance(Coordinate(d, 0), Coordinate(d, 1));
    base_ok = base_ok && oracle == Rational(1, n - 1) &&
              VerifyIndistinguishableSubsets(cd, 1).achieved == oracle;
  }
  out.Expect(base_ok, "base 1-subset distance is 1/(N-1) for N <= 64");

  const ChainDistribution inner = IndistBase(9, 1);
  Rational best = 1;
  BigInt best_b = 0, best_max = 0;
  for (unsigned j = 0; j <= 12; ++j) {
    const BigInt b = Pow2(j);
    const ChainDistribution cd = IndistRecursive(inner, b);
    const Rational eps = MeasuredSubsetEpsilon(cd);
    if (eps < best) {
      best = eps;
      best_b = b;
      best_max = cd.MaxValue();
    }
  }
  const bool tower = best_max >= Pow2(inner.MaxValue().get_ui());
  out.Expect(best <= Rational(1, 4),
             "recursive step on indist_base(9,1) reaches subset epsilon <= 1/4");
  out.Expect(tower, "max support value >= 2^(inner max)");
  out.detail << "base ok for N<=64; recursive sweep over B=2^0..2^12: best "
             << Fmt(best) << " (~" << best.get_d() << ") at B=" << best_b
             << ", max value " << best_max << " vs 2^"
             << inner.MaxValue() << "; ";

  const Game g = Figure1('a');
  const ChainDistribution small = IndistRecursive(IndistBase(5, 1), BigInt(4));
  const Rational achieved = VerifyEpsilonTiming(g, TimingFromChain(g, small)).achieved;
  const Rational measured = MeasuredSubsetEpsilon(small);
  out.Expect(achieved <= measured, "chain timing epsilon <= subset epsilon");
  const double t = Seconds(start);
  out.Expect(t < 300, "under 5 min");
  out.detail << "depth-3 timing eps " << Fmt(achieved) << " <= subset eps "
             << Fmt(measured) << "; " << t << " s";
}

int MaxOwnCount(const Agenda& a) {
  int best = 0;
  for (int p = 1; p <= a.n; ++p) best = std::max(best, a.Count(p));
  return best;
}

void Criterion9(Verdict& out) {
  const auto start = Clock::now();
  out.Expect(AgendaAr(1).ToString() == "2|3332|111|2", "agenda_Ar(1) golden");
  out.Expect(AgendaAr(2).ToString() ==
                 "bd|ccfh123|addaggjl2|bbehhekknp3332|acffillioo111|"
                 "egjjmppm2|iknn123|mo",
             "agenda_Ar(2) golden");
  std::string counts;
  for (int r = 1; r <= 6; ++r) {
    const Agenda a = AgendaAr(r);
    out.Expect(a.n == 16 * r - 13, "player count 16r-13 at r=" + std::to_string(r));
    const int most = MaxOwnCount(a);
    counts += " r=" + std::to_string(r) + ":" + std::to_string(most) + "/" +
              std::to_string(3 * (r - 1));
    if (r >= 2) {
      out.Expect(most <= 3 * (r - 1),
                 "node bound 3(r-1) at r=" + std::to_string(r) + " (max " +
                     std::to_string(most) + ")");
    }
  }
  for (int r = 1; r <= 5; ++r) {
    out.Expect(GammaR(r).n == 16 * r + 3, "gamma_r count at r=" + std::to_string(r));
  }
  const Agenda p = PerceptionGame(1);
  bool blocks = p.n == 10;
  std::vector<int> want;
  for (int i = 1; i <= 5; ++i) want.push_back(i);
  want.push_back(kSeparator);
  for (int i = 6; i <= 10; ++i) want.insert(want.end(), {i, i});
  want.insert(want.end(), {kSeparator, kSeparator});
  for (int i = 1; i <= 5; ++i) want.insert(want.end(), {i, i});
  want.push_back(kSeparator);
  for (int i = 6; i <= 10; ++i) want.push_back(i);
  blocks = blocks && p.seq == want;
  out.Expect(blocks, "perception_game(1) has 10 players and the block pattern");
  const double t = Seconds(start);
  out.Expect(t < 5, "under 5 s");
  out.detail << "goldens ok; max nodes per player vs 3(r-1):" << counts
             << "; " << t << " s";
}

void Criterion10(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(1010);
  const SymmetricChoicelessGame scg{3, {2, 3, 3, 1, 1, 2}};
  int ok = 0;
  Rational largest_in = 0;
  for (int i = 0; i < 20; ++i) {
    const SymmetricGameTiming t = testing::RandomSymmetricTiming(rng, scg, 3);
    const SymmetricGameTiming s = Symmetrize(scg, t);
    const Rational before = ChoicelessAchievedEpsilon(scg, t);
    const Rational after = ChoicelessAchievedEpsilon(scg, s);
    largest_in = std::max(largest_in, before);
    ok += IsSymmetric(s) && after <= before;
  }
  const double t = Seconds(start);
  out.Expect(ok == 20, "symmetric output with no larger epsilon");
  out.Expect(t < 60, "under 60 s");
  out.detail << ok << "/20 symmetric and not worse (largest input eps "
             << Fmt(largest_in) << "); " << t << " s";
}

bool HasNegative(const AgendaTiming& t) {
  for (const AgendaAtom& a : t.atoms) {
    for (const auto& xs : a.player_times) {
      for (const Rational& x : xs) {
        if (x < 0) return true;
      }
    }
  }
  return false;
}

void Criterion11(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(1111);
  const std::vector<Agenda> agendas = {
      AgendaAr(1), AgendaAr(2),
      MakeAgenda(3, {1, 2, 3, 1, 0, 2, 3, 0, 1, 0, 3, 2})};
  int ok = 0, made = 0;
  while (made < 50) {
    const Agenda& a = agendas[made % agendas.size()];
    const Rational lambda = Fraction(RandInt(rng, 1, 6), 10);
    const AgendaTiming t = testing::RandomAgendaTiming(rng, a, lambda, RandInt(rng, 1, 3));
    if (!HasNegative(t)) continue;
    ++made;
    Rational n = 1;
    for (const AgendaAtom& atom : t.atoms) {
      for (const Rational& x : atom.sep_times) n = std::max(n, x);
      for (const auto& xs : atom.player_times) {
        for (const Rational& x : xs) n = std::max(n, x);
      }
    }
    n = Ceil(n) + 1;
    const AgendaTiming s = ShiftNonneg(a, t, lambda, n, made == 1);
    const AgendaReport before = VerifyAgendaTiming(a, t, 1, lambda);
    const AgendaReport after = VerifyAgendaTiming(a, s, 1, lambda);
    bool good = std::all_of(after.requirement.begin(), after.requirement.end(),
                            [](bool b) { return b; });
    for (const AgendaAtom& atom : s.atoms) {
      for (const auto& xs : atom.player_times) {
        for (const Rational& x : xs) good = good && x >= 0 && x <= n;
      }
    }
    good = good && after.max_tv <= before.max_tv;
    ok += good;
  }
  const double t = Seconds(start);
  out.Expect(ok == 50, "shifted timings pass requirements 1-5 within [0,N]");
  out.Expect(t < 60, "under 60 s");
  out.detail << ok << "/50 shifted timings valid, in range and not worse; "
             << t << " s";
}

void Criterion12(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(1212);
  int up = 0, down = 0, flat = 0;
  for (int i = 0; i < 500; ++i) {
    const Rational c = Fraction(RandInt(rng, 21, 60), 10);
    const int n = RandInt(rng, 4, 12);
    const GapVerdict a = ClassifyGaps(testing::GrowingGaps(rng, n, c), c);
    up += a.gap_case == GapCase::kIncreasing && a.growth_certified;
    const GapVerdict b = ClassifyGaps(testing::ShrinkingGaps(rng, n, c), c);
    down += b.gap_case == GapCase::kDecreasing && b.growth_certified;
    std::vector<Rational> ap;
    const Rational x0(RandInt(rng, -9, 9));
    const Rational d = Fraction(RandInt(rng, 1, 9), RandInt(rng, 1, 4));
    for (int k = 0; k < n; ++k) ap.push_back(x0 + d * k);
    flat += ClassifyGaps(ap, c).gap_case == GapCase::kNeither;
  }
  const double t = Seconds(start);
  out.Expect(up == 500 && down == 500, "constructed cases are recognised");
  out.Expect(flat == 500, "arithmetic progressions are neither");
  out.Expect(t < 30, "under 30 s");
  out.detail << "increasing " << up << "/500, decreasing " << down
             << "/500, progressions neither " << flat << "/500; " << t << " s";
}

void Criterion13(Verdict& out) {
  const auto start = Clock::now();
  Rng rng(1313);
  const ClockBound lower = ClockBound::Scale(1);
  const ClockBound upper = ClockBound::PowMax(2);
  GameOptions opt;
  opt.max_depth = 5;
  opt.max_nodes = 40;
  opt.merge_rate = 0.7;
  int ok = 0, cyclic = 0;
  for (int i = 0; i < 20; ++i) {
    const Game g = RandomGame(rng, opt);
    cyclic += FindCycle(ContractInfosets(g)).has_value();
    const LuReport r = VerifyLuTiming(g, ConstructLuTiming(g, lower, upper),
                                      lower, upper);
    ok += g.max_depth() + 1 <= 6 && r.structural_ok && r.achieved == 0;
  }
  bool rejected = false;
  try {
    ConstructLuTiming(Figure1('a'), ClockBound::Scale(Rational(1, 2)),
                      ClockBound::Scale(2));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::kArgument;
  }
  const double t = Seconds(start);
  out.Expect(ok == 20, "constructed timings verify with epsilon 0");
  out.Expect(rejected, "scale/scale pair rejected");
  out.Expect(t < 30, "under 30 s");
  out.detail << ok << "/20 verified with eps 0 (" << cyclic
             << " not exactly timeable); scale/scale rejected; " << t << " s";
}

}  // namespace
}  // namespace timeable

int main(int argc, char** argv) {
  using Runner = std::function<void(timeable::Verdict&)>;
  const std::vector<std::pair<const char*, Runner>> criteria = {
      {"exact-timing verdicts on the three coin games", timeable::Criterion1},
      {"cycle test agrees with search on 1000 games", timeable::Criterion2},
      {"linear-time check on path games", timeable::Criterion3},
      {"shifted window timing", timeable::Criterion4},
      {"guessing game values", timeable::Criterion5},
      {"gain bound on 200 random games", timeable::Criterion6},
      {"total variation suites", timeable::Criterion7},
      {"chain constructions", timeable::Criterion8},
      {"family goldens and counts", timeable::Criterion9},
      {"symmetrization", timeable::Criterion10},
      {"nonnegativity shift", timeable::Criterion11},
      {"gap classifier", timeable::Criterion12},
      {"perceived-time construction", timeable::Criterion13},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);
  }
  int failed = 0;
  for (int k : selected) {
    timeable::Verdict out;
    try {
      criteria[k - 1].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << k << " "
              << criteria[k - 1].first << ": " << out.detail.str() << "\n";
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
