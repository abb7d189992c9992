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

#ifndef TIMEABLE_FAMILIES_H_
#define TIMEABLE_FAMILIES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "timeable/game.h"

namespace timeable {

// Coin game of the introduction: 'a' both players guess in either order,
// 'b' player 1 moves only after heads, 'c' the second mover is asked only
// after a correct first guess.
Game Figure1(char variant);

// n players (1..n) and a nonempty sequence over them.
struct SymmetricChoicelessGame {
  int n = 0;
  std::vector<int> seq;
};

void CheckChoiceless(const SymmetricChoicelessGame& scg);

// All permutations of 1..n in lexicographic order; perm[p-1] is the number
// given to player p.
std::vector<std::vector<int>> Permutations(int n);

inline constexpr std::size_t kDefaultPermutationLimit = 720;

// Chance picks a numbering uniformly; the history then follows the sequence
// under that numbering. Nodes with the same player and the same number of
// earlier own nodes share an infoset.
Game ExpandChoiceless(const SymmetricChoicelessGame& scg,
                      std::size_t limit = kDefaultPermutationLimit);

inline constexpr int kSeparator = 0;

// Sequence over {separator, 1..n}. names[p-1] is the symbol printed for
// player p.
struct Agenda {
  int n = 0;
  std::vector<int> seq;
  std::vector<std::string> names;

  int Count(int player) const;
  int separators() const { return Count(kSeparator); }
  // Symbols concatenated when all names are single characters, otherwise
  // separated by spaces.
  std::string ToString() const;
};

void CheckAgenda(const Agenda& agenda);

// Agenda with numeric names; separators written as 0.
Agenda MakeAgenda(int n, std::vector<int> seq);

Agenda AgendaAr(int r);

// Drops separators; player ids are kept, compacted when some are unused.
SymmetricChoicelessGame StripSeparators(const Agenda& agenda);

SymmetricChoicelessGame GammaR(int r);

// 1..n | (n+1)(n+1)..(2n)(2n) | | 1 1 .. n n | (n+1)..(2n) with n = 4c^4+1.
Agenda PerceptionGame(int c);

}  // namespace timeable

#endif  // TIMEABLE_FAMILIES_H_
