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

#include <string>

#include "doctest.h"
#include "test_util.h"
#include "timeable/documents.h"
#include "timeable/errors.h"
#include "timeable/families.h"
#include "timeable/game.h"

namespace timeable {
namespace {

bool HasIssue(const ValidationReport& r, const std::string& prefix) {
  for (const std::string& issue : r.issues) {
    if (issue.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

// Player 1 moves twice and cannot tell which first move was made.
GameSpec ForgetfulSpec() {
  GameSpec spec;
  spec.players = {"1"};
  spec.nodes.resize(7);
  for (int i = 0; i < 7; ++i) spec.nodes[i].id = i;
  auto decision = [&](int v, const char* infoset, int a, int b) {
    spec.nodes[v].kind = NodeKind::kDecision;
    spec.nodes[v].player = 1;
    spec.nodes[v].infoset = infoset;
    spec.nodes[v].children = {Edge{a, "l", {}}, Edge{b, "r", {}}};
  };
  decision(0, "X", 1, 2);
  decision(1, "Y", 3, 4);
  decision(2, "Y", 5, 6);
  for (int v = 3; v < 7; ++v) {
    spec.nodes[v].payoffs = {Rational(v == 3 || v == 6 ? 1 : 0)};
  }
  return spec;
}

TEST_SUITE("game") {
  TEST_CASE("figure1 games validate with perfect recall") {
    for (char v : {'a', 'b', 'c'}) {
      CAPTURE(v);
      const Game g = Figure1(v);
      const ValidationReport r = Validate(g);
      CHECK(r.structurally_ok());
      CHECK(r.perfect_recall);
      CHECK(r.payoffs_in_unit_interval);
      CHECK(r.issues.empty());
      CHECK(g.FindInfoset("P1-set") >= 0);
      CHECK(g.FindInfoset("P2-set") >= 0);
    }
    CHECK(Figure1('a').num_nodes() == 15);
    CHECK_THROWS_AS(Figure1('d'), Error);
  }

  TEST_CASE("forgetful player is detected") {
    const ValidationReport r = Validate(ForgetfulSpec());
    CHECK(r.structurally_ok());
    CHECK_FALSE(r.perfect_recall);
    CHECK(HasIssue(r, "perfect recall: player 1"));
    const Game g = Game::Build(ForgetfulSpec());
    CHECK(GetExperience(g, 1, 1) != GetExperience(g, 2, 1));
    CHECK(r.max_nodes_per_history.at(0) == 2);
  }

  TEST_CASE("experience and own path") {
    const Game g = Game::Build(ForgetfulSpec());
    const Experience e = GetExperience(g, 4, 1);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == ExperienceStep{"X", 0});
    CHECK(e[1] == ExperienceStep{"Y", 1});
    CHECK(GetExperience(g, 0, 1).empty());
    CHECK(OwnPath(g, 4, 1) == std::vector<NodeIndex>{0, 1});
    CHECK(OwnPath(g, 2, 1) == std::vector<NodeIndex>{0, 2});
  }

  TEST_CASE("mutations name the violated invariant") {
    const GameSpec base = Figure1('a').spec();
    struct Case {
      const char* prefix;
      std::function<void(GameSpec&)> mutate;
    };
    const std::vector<Case> cases = {
        {"players", [](GameSpec& s) { s.players.clear(); }},
        {"tree", [](GameSpec& s) { s.nodes[1].children[0].child = 0; }},
        {"tree", [](GameSpec& s) { s.nodes[1].children[0].child = 99; }},
        {"tree",
         [](GameSpec& s) {
           Node extra;
           extra.id = 100;
           extra.payoffs = {Rational(0), Rational(0)};
           s.nodes.push_back(extra);
         }},
        {"tree", [](GameSpec& s) { s.nodes[3].id = s.nodes[4].id; }},
        {"chance probabilities",
         [](GameSpec& s) { s.nodes[0].children[0].prob = Rational(1, 3); }},
        {"chance probabilities",
         [](GameSpec& s) { s.nodes[0].children[0].prob.reset(); }},
        {"kind fields", [](GameSpec& s) { s.nodes[1].player = 0; }},
        {"kind fields", [](GameSpec& s) { s.nodes[1].player = 3; }},
        {"kind fields",
         [](GameSpec& s) { s.nodes[1].children[0].prob = Rational(1); }},
        {"payoffs", [](GameSpec& s) { s.nodes[3].payoffs.pop_back(); }},
        {"infosets", [](GameSpec& s) { s.nodes[2].infoset = "P1-set"; }},
        {"infosets",
         [](GameSpec& s) { s.nodes[2].children[0].action = "third"; }},
    };
    for (const Case& c : cases) {
      CAPTURE(c.prefix);
      GameSpec spec = base;
      c.mutate(spec);
      const ValidationReport r = Validate(spec);
      CHECK_FALSE(r.structurally_ok());
      CHECK(HasIssue(r, c.prefix));
      try {
        Game::Build(spec);
        FAIL("built an invalid game");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kInvalid);
        CHECK(std::string(e.what()).find(c.prefix) != std::string::npos);
      }
    }
  }

  TEST_CASE("unnamed decision nodes get singleton infosets") {
    GameSpec spec = ForgetfulSpec();
    spec.nodes[1].infoset.clear();
    spec.nodes[2].infoset.clear();
    const Game g = Game::Build(spec);
    CHECK(g.infoset_of(1) != g.infoset_of(2));
    CHECK(Validate(g).perfect_recall);
  }

  TEST_CASE("random perfect recall games validate") {
    testing::Rng rng(21);
    testing::GameOptions opt;
    opt.perfect_recall = true;
    opt.players = 3;
    for (int i = 0; i < 200; ++i) {
      const Game g = testing::RandomGame(rng, opt);
      const ValidationReport r = Validate(g);
      CHECK(r.perfect_recall);
      CHECK(r.payoffs_in_unit_interval);
      for (int v : g.preorder()) {
        if (g.parent(v) != kNoNode) CHECK(g.depth(v) == g.depth(g.parent(v)) + 1);
      }
    }
  }

  TEST_CASE("perfect recall means equal experience across infosets") {
    testing::Rng rng(22);
    testing::GameOptions opt;
    opt.merge_rate = 0.8;
    for (int i = 0; i < 200; ++i) {
      const Game g = testing::RandomGame(rng, opt);
      bool equal = true;
      for (int s = 0; s < g.num_infosets(); ++s) {
        const auto& nodes = g.infoset_nodes(s);
        const int p = g.infoset_player(s);
        for (NodeIndex v : nodes) {
          equal = equal && GetExperience(g, v, p) ==
                               GetExperience(g, nodes.front(), p);
        }
      }
      CHECK(Validate(g).perfect_recall == equal);
    }
  }

  TEST_CASE("document round trip") {
    testing::Rng rng(23);
    testing::GameOptions opt;
    opt.unit_payoffs = false;
    for (int i = 0; i < 100; ++i) {
      const Game g = testing::RandomGame(rng, opt);
      const std::string text = SerializeGame(g);
      const Game back = ParseGame(text);
      CHECK(SerializeGame(back) == text);
      CHECK(GameDigest(back) == GameDigest(g));
    }
  }
}

}  // namespace
}  // namespace timeable
