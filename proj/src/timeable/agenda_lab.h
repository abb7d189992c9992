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

#ifndef TIMEABLE_AGENDA_LAB_H_
#define TIMEABLE_AGENDA_LAB_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "timeable/families.h"
#include "timeable/rational.h"

namespace timeable {

struct AgendaAtom {
  Rational prob;
  std::vector<Rational> sep_times;                  // one per separator
  std::vector<std::vector<Rational>> player_times;  // [p-1][occurrence]
};

struct AgendaTiming {
  std::vector<AgendaAtom> atoms;
};

// Throws Error(kArgument) when the timing does not fit the agenda.
void CheckAgendaShape(const Agenda& agenda, const AgendaTiming& t);

struct AgendaReport {
  // requirement[k] holds requirement k+1 (domains, separator gaps, own
  // order, not too late, not too early).
  std::array<bool, 5> requirement{true, true, true, true, true};
  std::vector<std::string> issues;  // first violation of each failing check
  Rational max_tv = 0;              // over players with equal counts
  int player_a = 0;
  int player_b = 0;
  bool verdict = false;  // requirements 1-5 hold and max_tv <= eps
};

AgendaReport VerifyAgendaTiming(const Agenda& agenda, const AgendaTiming& t,
                                const Rational& eps, const Rational& lambda);

// rows[k] holds the times of the k-th numbering (lexicographic order of
// Permutations(n)) along the sequence.
struct SymmetricAtom {
  Rational prob;
  std::vector<std::vector<Rational>> rows;
};

struct SymmetricGameTiming {
  std::vector<SymmetricAtom> atoms;
};

void CheckSymmetricTiming(const SymmetricChoicelessGame& scg,
                          const SymmetricGameTiming& t);

bool IsSymmetric(const SymmetricGameTiming& t);

// Largest distance between the first-j own times of one player under two
// numberings, over players, numbering pairs and admissible j.
Rational ChoicelessAchievedEpsilon(const SymmetricChoicelessGame& scg,
                                   const SymmetricGameTiming& t);

// Exact mixture over a uniform relabelling of the numberings.
SymmetricGameTiming Symmetrize(const SymmetricChoicelessGame& scg,
                               const SymmetricGameTiming& t,
                               std::size_t limit = kDefaultPermutationLimit);

// Increasing bijection from (-inf, lambda] onto (0, lambda] with f(x) >= x;
// identity above lambda.
Rational ShiftMap(const Rational& x, const Rational& lambda);

// Checks monotonicity and f(x) >= x on 1000 grid points in [-n, lambda].
bool ShiftSelfCheck(const Rational& lambda, const Rational& n);

// Applies ShiftMap to the player times. Requires requirements 1-5 to hold,
// all times <= n and 0 < lambda < n.
AgendaTiming ShiftNonneg(const Agenda& agenda, const AgendaTiming& t,
                         const Rational& lambda, const Rational& n,
                         bool self_check = false);

enum class GapCase { kIncreasing, kDecreasing, kNeither };

struct GapVerdict {
  GapCase gap_case = GapCase::kNeither;
  bool growth_certified = false;
  int failing_window = -1;  // 1-based, for kNeither
};

GapVerdict ClassifyGaps(const std::vector<Rational>& xs, const Rational& c);

struct GapRatioReport {
  Rational late_second;  // P((X4 - X2) / (X4 - X1) >= 2/c^2)
  Rational early_third;  // P((X3 - X1) / (X4 - X1) >= 2/c^2)
  Rational both;
};

// Separator gap-ratio events for timings of perception games.
GapRatioReport PerceptionGapRatios(const Agenda& agenda,
                                   const AgendaTiming& t, int c);

}  // namespace timeable

#endif  // TIMEABLE_AGENDA_LAB_H_
