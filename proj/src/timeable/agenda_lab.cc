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

#include "timeable/agenda_lab.h"

#include <algorithm>
#include <map>

#include "timeable/distribution.h"
#include "timeable/errors.h"

namespace timeable {

void CheckAgendaShape(const Agenda& agenda, const AgendaTiming& t) {
  CheckAgenda(agenda);
  Require(!t.atoms.empty(), "agenda timing: no atoms");
  Rational total = 0;
  for (const AgendaAtom& atom : t.atoms) {
    Require(atom.prob > 0, "agenda timing: non-positive atom probability");
    total += atom.prob;
    Require(static_cast<int>(atom.sep_times.size()) == agenda.separators(),
            "agenda timing: separator count mismatch");
    Require(static_cast<int>(atom.player_times.size()) == agenda.n,
            "agenda timing: player count mismatch");
    for (int p = 1; p <= agenda.n; ++p) {
      Require(static_cast<int>(atom.player_times[p - 1].size()) ==
                  agenda.Count(p),
              "agenda timing: occurrence count mismatch for player " +
                  std::to_string(p));
    }
  }
  Require(total == 1, "agenda timing: atom probabilities sum to " +
                          FormatRational(total));
}

AgendaReport VerifyAgendaTiming(const Agenda& agenda, const AgendaTiming& t,
                                const Rational& eps, const Rational& lambda) {
  CheckAgendaShape(agenda, t);
  AgendaReport report;
  auto flag = [&report](int k, const std::string& what) {
    if (report.requirement[k]) report.issues.push_back(what);
    report.requirement[k] = false;
  };
  const int seps = agenda.separators();
  for (std::size_t a = 0; a < t.atoms.size(); ++a) {
    const AgendaAtom& atom = t.atoms[a];
    const std::string where = "atom " + std::to_string(a) + ": ";
    for (int j = 0; j < seps; ++j) {
      if (atom.sep_times[j] < 0) {
        flag(0, where + "separator " + std::to_string(j + 1) + " is negative");
      }
      if (j + 1 < seps && atom.sep_times[j] + 1 > atom.sep_times[j + 1]) {
        flag(1, where + "separators " + std::to_string(j + 1) + " and " +
                    std::to_string(j + 2) + " are less than 1 apart");
      }
    }
    for (int p = 1; p <= agenda.n; ++p) {
      const auto& xs = atom.player_times[p - 1];
      for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        if (xs[j] >= xs[j + 1]) {
          flag(2, where + "player " + std::to_string(p) +
                      " times are not increasing");
        }
      }
    }
    // Tightest separator after and before each position.
    const int len = static_cast<int>(agenda.seq.size());
    std::vector<const Rational*> after(len + 1, nullptr);
    std::vector<const Rational*> before(len + 1, nullptr);
    int sep_index = seps;
    for (int i = len - 1; i >= 0; --i) {
      after[i] = after[i + 1];
      if (agenda.seq[i] == kSeparator) {
        const Rational* x = &atom.sep_times[--sep_index];
        if (!after[i] || *x < *after[i]) after[i] = x;
      }
    }
    sep_index = 0;
    std::vector<int> occurrence(agenda.n + 1, 0);
    for (int i = 0; i < len; ++i) {
      const int s = agenda.seq[i];
      if (s == kSeparator) {
        const Rational* x = &atom.sep_times[sep_index++];
        if (!before[i] || *x > *before[i]) before[i] = x;
        before[i + 1] = before[i];
        continue;
      }
      before[i + 1] = before[i];
      const Rational& x = atom.player_times[s - 1][occurrence[s]++];
      const std::string who = where + "occurrence " +
                              std::to_string(occurrence[s]) + " of player " +
                              std::to_string(s);
      if (after[i] && x > *after[i] + lambda) {
        flag(3, who + " is too late for a later separator");
      }
      if (before[i] && x < *before[i] - lambda) {
        flag(4, who + " is too early for an earlier separator");
      }
    }
  }

  std::map<int, std::vector<int>> by_count;
  for (int p = 1; p <= agenda.n; ++p) by_count[agenda.Count(p)].push_back(p);
  for (const auto& [k, players] : by_count) {
    if (k == 0 || players.size() < 2) continue;
    std::vector<Distribution> laws;
    for (int p : players) {
      ProbabilityMap probs;
      for (const AgendaAtom& atom : t.atoms) {
        probs[atom.player_times[p - 1]] += atom.prob;
      }
      laws.push_back(Distribution::FromMap(std::move(probs)));
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
      for (std::size_t j = i + 1; j < players.size(); ++j) {
        Rational tv = TvDistance(laws[i], laws[j]);
        if (tv > report.max_tv) {
          report.max_tv = tv;
          report.player_a = players[i];
          report.player_b = players[j];
        }
      }
    }
  }
  report.verdict =
      std::all_of(report.requirement.begin(), report.requirement.end(),
                  [](bool b) { return b; }) &&
      report.max_tv <= eps;
  return report;
}

void CheckSymmetricTiming(const SymmetricChoicelessGame& scg,
                          const SymmetricGameTiming& t) {
  CheckChoiceless(scg);
  Require(!t.atoms.empty(), "choiceless timing: no atoms");
  std::size_t rows = 1;
  for (int i = 2; i <= scg.n; ++i) rows *= i;
  Rational total = 0;
  for (const SymmetricAtom& atom : t.atoms) {
    Require(atom.prob > 0, "choiceless timing: non-positive probability");
    total += atom.prob;
    Require(atom.rows.size() == rows,
            "choiceless timing: expected one row per numbering");
    for (const auto& row : atom.rows) {
      Require(row.size() == scg.seq.size(),
              "choiceless timing: row length differs from the sequence");
      for (std::size_t i = 0; i < row.size(); ++i) {
        Require(row[i] >= 0, "choiceless timing: negative time");
        Require(i == 0 || row[i - 1] + 1 <= row[i],
                "choiceless timing: consecutive times less than 1 apart");
      }
    }
  }
  Require(total == 1, "choiceless timing: probabilities sum to " +
                          FormatRational(total));
}

bool IsSymmetric(const SymmetricGameTiming& t) {
  for (const SymmetricAtom& atom : t.atoms) {
    for (const auto& row : atom.rows) {
      if (row != atom.rows.front()) return false;
    }
  }
  return true;
}

Rational ChoicelessAchievedEpsilon(const SymmetricChoicelessGame& scg,
                                   const SymmetricGameTiming& t) {
  CheckSymmetricTiming(scg, t);
  const auto perms = Permutations(scg.n);
  Rational worst = 0;
  for (int p = 1; p <= scg.n; ++p) {
    // laws[j-1] collects, per numbering, the law of the first j own times.
    std::vector<std::vector<Distribution>> laws;
    for (std::size_t s = 0; s < perms.size(); ++s) {
      std::vector<int> own;
      for (std::size_t i = 0; i < scg.seq.size(); ++i) {
        if (scg.seq[i] == perms[s][p - 1]) own.push_back(static_cast<int>(i));
      }
      for (std::size_t j = 1; j <= own.size(); ++j) {
        ProbabilityMap probs;
        for (const SymmetricAtom& atom : t.atoms) {
          Outcome x;
          for (std::size_t q = 0; q < j; ++q) x.push_back(atom.rows[s][own[q]]);
          probs[std::move(x)] += atom.prob;
        }
        if (laws.size() < j) laws.resize(j);
        laws[j - 1].push_back(Distribution::FromMap(std::move(probs)));
      }
    }
    for (const auto& group : laws) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          worst = std::max(worst, TvDistance(group[a], group[b]));
        }
      }
    }
  }
  return worst;
}

SymmetricGameTiming Symmetrize(const SymmetricChoicelessGame& scg,
                               const SymmetricGameTiming& t,
                               std::size_t limit) {
  CheckChoiceless(scg);
  std::size_t count = 1;
  for (int i = 2; i <= scg.n; ++i) {
    count *= i;
    if (count > limit) {
      Fail(ErrorCode::kBudget, "symmetrize: " + std::to_string(scg.n) +
                                   "! numberings exceed the limit " +
                                   std::to_string(limit));
    }
  }
  CheckSymmetricTiming(scg, t);
  const Rational share = Rational(1) / Rational(static_cast<unsigned long>(count));
  std::map<std::vector<Rational>, Rational> merged;
  for (const SymmetricAtom& atom : t.atoms) {
    for (const auto& row : atom.rows) merged[row] += atom.prob * share;
  }
  SymmetricGameTiming out;
  for (auto& [row, prob] : merged) {
    out.atoms.push_back(
        SymmetricAtom{prob, std::vector<std::vector<Rational>>(count, row)});
  }
  return out;
}

Rational ShiftMap(const Rational& x, const Rational& lambda) {
  Require(lambda > 0, "shift: lambda must be positive");
  const Rational delta = lambda / 2;
  if (x <= 0) return delta / (1 - x);
  if (x <= lambda) return delta + x * (lambda - delta) / lambda;
  return x;
}

bool ShiftSelfCheck(const Rational& lambda, const Rational& n) {
  const int points = 1000;
  const Rational lo = -std::max(n, Rational(1));
  const Rational step = (lambda - lo) / (points - 1);
  Rational prev_f;
  for (int k = 0; k < points; ++k) {
    const Rational x = lo + step * k;
    const Rational f = ShiftMap(x, lambda);
    if (f < x || f <= 0 || f > lambda) return false;
    if (k > 0 && f <= prev_f) return false;
    prev_f = f;
  }
  return true;
}

AgendaTiming ShiftNonneg(const Agenda& agenda, const AgendaTiming& t,
                         const Rational& lambda, const Rational& n,
                         bool self_check) {
  Require(lambda > 0 && lambda < n, "shift: need 0 < lambda < N");
  const AgendaReport report = VerifyAgendaTiming(agenda, t, Rational(1), lambda);
  for (std::size_t k = 0; k < report.requirement.size(); ++k) {
    Require(report.requirement[k], "shift: input violates requirement " +
                                       std::to_string(k + 1));
  }
  for (const AgendaAtom& atom : t.atoms) {
    for (const Rational& x : atom.sep_times) {
      Require(x <= n, "shift: a separator time exceeds N");
    }
    for (const auto& xs : atom.player_times) {
      for (const Rational& x : xs) Require(x <= n, "shift: a time exceeds N");
    }
  }
  if (self_check && !ShiftSelfCheck(lambda, n)) {
    Fail(ErrorCode::kArgument, "shift: self-check of the map failed");
  }
  AgendaTiming out = t;
  for (AgendaAtom& atom : out.atoms) {
    for (auto& xs : atom.player_times) {
      for (Rational& x : xs) x = ShiftMap(x, lambda);
    }
  }
  return out;
}

GapVerdict ClassifyGaps(const std::vector<Rational>& xs, const Rational& c) {
  Require(xs.size() >= 4, "classify_gaps: need at least 4 points");
  Require(c > 2, "classify_gaps: need c > 2");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Require(xs[i - 1] < xs[i], "classify_gaps: sequence must increase");
  }
  const int n = static_cast<int>(xs.size());
  // x(i) with the 1-based indexing of the statement.
  auto x = [&xs](int i) -> const Rational& { return xs[i - 1]; };
  auto first = [&](int i) {
    return x(i + 2) < ((c - 1) * x(i) + x(i + 3)) / c &&
           x(i + 1) < ((c - 1) * x(i) + x(i + 2)) / c;
  };
  auto second = [&](int i) {
    return x(i + 1) > (x(i) + (c - 1) * x(i + 3)) / c &&
           x(i + 2) > (x(i + 1) + (c - 1) * x(i + 3)) / c;
  };
  GapVerdict verdict;
  const bool use_first = first(1);
  const bool use_second = !use_first && second(1);
  if (!use_first && !use_second) {
    verdict.failing_window = 1;
    return verdict;
  }
  for (int i = 2; i <= n - 3; ++i) {
    if (use_first ? !first(i) : !second(i)) {
      verdict.failing_window = i;
      return verdict;
    }
  }
  const Rational factor = c - 1 / c - 1;
  bool growth = true;
  for (int i = 2; i <= n - 1; ++i) {
    if (use_first) {
      growth = growth && x(i + 1) - x(i) >= factor * (x(i) - x(1));
    } else {
      growth = growth && x(i) - x(i - 1) >= factor * (x(n) - x(i));
    }
  }
  verdict.gap_case = use_first ? GapCase::kIncreasing : GapCase::kDecreasing;
  verdict.growth_certified = growth;
  return verdict;
}

GapRatioReport PerceptionGapRatios(const Agenda& agenda,
                                   const AgendaTiming& t, int c) {
  CheckAgendaShape(agenda, t);
  Require(agenda.separators() == 4, "gap ratios: agenda needs 4 separators");
  Require(c >= 1, "gap ratios: c must be positive");
  const Rational threshold = Rational(2) / Rational(c * c);
  GapRatioReport report;
  for (const AgendaAtom& atom : t.atoms) {
    const auto& s = atom.sep_times;
    const Rational span = s[3] - s[0];
    Require(span > 0, "gap ratios: separators must spread out");
    const bool late = (s[3] - s[1]) / span >= threshold;
    const bool early = (s[2] - s[0]) / span >= threshold;
    if (late) report.late_second += atom.prob;
    if (early) report.early_third += atom.prob;
    if (late && early) report.both += atom.prob;
  }
  return report;
}

}  // namespace timeable
