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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "timeable/errors.h"
#include "timeable/families.h"

namespace timeable {
namespace {

int MaxCount(const Agenda& a) {
  int best = 0;
  for (int p = 1; p <= a.n; ++p) best = std::max(best, a.Count(p));
  return best;
}

TEST_SUITE("families") {
  TEST_CASE("agenda goldens") {
    CHECK(AgendaAr(1).ToString() == "2|3332|111|2");
    CHECK(AgendaAr(2).ToString() ==
          "bd|ccfh123|addaggjl2|bbehhekknp3332|acffillioo111|egjjmppm2|"
          "iknn123|mo");
    CHECK(AgendaAr(1).n == 3);
    CHECK_THROWS_AS(AgendaAr(0), Error);
  }

  TEST_CASE("agenda player counts") {
    for (int r = 1; r <= 6; ++r) {
      CAPTURE(r);
      const Agenda a = AgendaAr(r);
      CHECK(a.n == 16 * r - 13);
      for (int p = 1; p <= a.n; ++p) CHECK(a.Count(p) >= 1);
    }
    // Maximum own-node counts of the construction.
    const std::vector<int> counts = {3, 5, 7, 9, 12, 15};
    for (int r = 1; r <= 6; ++r) CHECK(MaxCount(AgendaAr(r)) == counts[r - 1]);
  }

  TEST_CASE("strip separators") {
    const SymmetricChoicelessGame scg =
        StripSeparators(MakeAgenda(3, {2, 0, 3, 3, 0, 1, 1, 0, 2}));
    CHECK(scg.n == 3);
    CHECK(scg.seq == std::vector<int>{2, 3, 3, 1, 1, 2});
    const SymmetricChoicelessGame same = StripSeparators(MakeAgenda(2, {1, 2, 1}));
    CHECK(same.seq == std::vector<int>{1, 2, 1});
    for (int r = 1; r <= 4; ++r) {
      const Agenda a = AgendaAr(r);
      const SymmetricChoicelessGame s = StripSeparators(a);
      CHECK(s.n == a.n);
      CHECK(static_cast<int>(s.seq.size()) ==
            static_cast<int>(a.seq.size()) - a.separators());
      std::vector<int> before, after;
      for (int p = 1; p <= a.n; ++p) before.push_back(a.Count(p));
      for (int p = 1; p <= s.n; ++p) {
        after.push_back(static_cast<int>(std::count(s.seq.begin(), s.seq.end(), p)));
      }
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      CHECK(before == after);
    }
  }

  TEST_CASE("gamma player counts") {
    for (int r = 1; r <= 5; ++r) CHECK(GammaR(r).n == 16 * r + 3);
  }

  TEST_CASE("perception game") {
    const Agenda a = PerceptionGame(1);
    CHECK(a.n == 10);
    CHECK(a.separators() == 4);
    CHECK(a.seq.size() == 6 * 5 + 4);
    for (int p = 1; p <= 10; ++p) CHECK(a.Count(p) == 3);
    CHECK(a.ToString() ==
          "1 2 3 4 5 | 6 6 7 7 8 8 9 9 10 10 | | 1 1 2 2 3 3 4 4 5 5 | "
          "6 7 8 9 10");
    CHECK(PerceptionGame(2).n == 2 * (4 * 16 + 1));
    CHECK_THROWS_AS(PerceptionGame(0), Error);
  }

  TEST_CASE("choiceless expansion") {
    const SymmetricChoicelessGame scg{3, {2, 3, 3, 1, 1, 2}};
    CHECK(Permutations(3).size() == 6);
    CHECK(Permutations(3).front() == std::vector<int>{1, 2, 3});
    const Game g = ExpandChoiceless(scg);
    CHECK(g.num_nodes() == 1 + 6 * 7);
    CHECK(g.node(g.root()).children.size() == 6);
    const ValidationReport r = Validate(g);
    CHECK(r.perfect_recall);
    for (NodeIndex v = 0; v < g.num_nodes(); ++v) {
      if (g.is_decision(v)) CHECK(g.node(v).children.size() == 1);
    }
    // One infoset per (player, prior own count).
    CHECK(g.num_infosets() == 6);
    const Game single = ExpandChoiceless({1, {1, 1}});
    CHECK(single.node(single.root()).children.size() == 1);
    CHECK_THROWS_AS(ExpandChoiceless({7, {1, 2, 3, 4, 5, 6, 7}}), Error);
    CHECK_THROWS_AS(CheckChoiceless({2, {1, 3}}), Error);
    CHECK_NOTHROW(ExpandChoiceless({4, {1, 2, 3, 4}}, 24));
    CHECK_THROWS_AS(ExpandChoiceless({4, {1, 2, 3, 4}}, 23), Error);
  }

  TEST_CASE("agenda validation") {
    CHECK_THROWS_AS(MakeAgenda(2, {1, 3}), Error);
    CHECK_NOTHROW(MakeAgenda(2, {1, 0, 2}));
  }
}

}  // namespace
}  // namespace timeable
