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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "timeable/timeable.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { tmb_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

tmb_game* Family(int variant) {
  Owned doc;
  const int params[] = {variant};
  REQUIRE(tmb_family("figure1", params, 1, &doc.s, nullptr) == TMB_OK);
  tmb_game* game = nullptr;
  REQUIRE(tmb_game_parse(doc.s, &game) == TMB_OK);
  return game;
}

TEST_SUITE("capi") {
  TEST_CASE("version and errors") {
    CHECK(std::strlen(tmb_version()) > 0);
    tmb_game* game = nullptr;
    CHECK(tmb_game_parse("{", &game) == TMB_ERR_PARSE);
    CHECK(game == nullptr);
    CHECK(std::string(tmb_last_error()).find("line 1") != std::string::npos);
    CHECK(tmb_game_parse(nullptr, &game) == TMB_ERR_ARGUMENT);
    CHECK(tmb_game_parse(R"({"players": [], "nodes": [], "root": 0})", &game) ==
          TMB_ERR_PARSE);
    CHECK(tmb_game_parse(R"({"players": ["a"], "root": 0, "nodes": [
                           {"id": 0, "kind": "leaf", "payoffs": [1, 2]}]})",
                         &game) == TMB_ERR_INVALID);
    Owned out;
    CHECK(tmb_check(nullptr, &out.s) == TMB_ERR_ARGUMENT);
    CHECK(tmb_game_num_nodes(nullptr) == -1);
    tmb_game_free(nullptr);
  }

  TEST_CASE("check and exact timing") {
    tmb_game* a = Family(0);
    tmb_game* b = Family(1);
    CHECK(tmb_game_num_nodes(a) == 15);
    Owned report, timing, dot;
    CHECK(tmb_check(a, &report.s) == TMB_NEGATIVE);
    CHECK(report.str().find("P1-set") != std::string::npos);
    CHECK(tmb_exact_timing(a, &timing.s) == TMB_NEGATIVE);
    CHECK(timing.s == nullptr);
    CHECK(tmb_dot(a, &dot.s) == TMB_NEGATIVE);
    CHECK(dot.str().find("color=red") != std::string::npos);
    Owned ok;
    CHECK(tmb_exact_timing(b, &ok.s) == TMB_OK);
    CHECK(ok.str().find("\"times\"") != std::string::npos);
    tmb_game_free(a);
    tmb_game_free(b);
  }

  TEST_CASE("window timing verification") {
    tmb_game* a = Family(0);
    Owned timing, report, tight;
    REQUIRE(tmb_window_timing(a, 8, &timing.s) == TMB_OK);
    CHECK(tmb_verify_timing(a, timing.s, "1/7", 0, &report.s) == TMB_OK);
    CHECK(report.str().find("\"achieved\": \"1/7\"") != std::string::npos);
    CHECK(tmb_verify_timing(a, timing.s, "1/8", 0, &tight.s) == TMB_NEGATIVE);
    Owned bad;
    CHECK(tmb_verify_timing(a, timing.s, "x", 0, &bad.s) == TMB_ERR_PARSE);
    Owned budget;
    CHECK(tmb_verify_timing(a, timing.s, nullptr, 2, &budget.s) == TMB_ERR_BUDGET);
    Owned est;
    CHECK(tmb_estimate_timing(a, timing.s, 0, 5, 2000, &est.s) == TMB_OK);
    CHECK(est.str().find("standard_error") != std::string::npos);
    tmb_game_free(a);
  }

  TEST_CASE("families and agendas") {
    Owned doc, text;
    const int r[] = {1};
    CHECK(tmb_family("agenda-ar", r, 1, &doc.s, &text.s) == TMB_OK);
    CHECK(text.str() == "2|3332|111|2");
    Owned none;
    CHECK(tmb_family("agenda-ar", nullptr, 0, &none.s, nullptr) ==
          TMB_ERR_ARGUMENT);
    CHECK(tmb_family("nope", r, 1, &none.s, nullptr) == TMB_ERR_ARGUMENT);
    Owned scg, scg_text, game;
    const int seq[] = {2, 3, 3, 1, 1, 2};
    CHECK(tmb_family("choiceless", seq, 6, &scg.s, &scg_text.s) == TMB_OK);
    CHECK(scg_text.str() == "233112");
    CHECK(tmb_expand_choiceless(scg.s, 0, &game.s) == TMB_OK);
    tmb_game* g = nullptr;
    REQUIRE(tmb_game_parse(game.s, &g) == TMB_OK);
    CHECK(tmb_game_num_nodes(g) == 43);
    tmb_game_free(g);
  }

  TEST_CASE("guessing advantage and lu timing") {
    Owned doc, timing, report;
    const int mk[] = {2, 3};
    REQUIRE(tmb_family("guessing", mk, 2, &doc.s, nullptr) == TMB_OK);
    tmb_game* g = nullptr;
    REQUIRE(tmb_game_parse(doc.s, &g) == TMB_OK);
    REQUIRE(tmb_delay_timing(g, "1/4", &timing.s) == TMB_OK);
    CHECK(tmb_advantage(g, timing.s, 1, nullptr, 0, &report.s) == TMB_OK);
    CHECK(report.str().find("\"augmented\": \"5/8\"") != std::string::npos);
    Owned aug;
    CHECK(tmb_augment(g, timing.s, 0, &aug.s) == TMB_OK);
    tmb_game* h = nullptr;
    CHECK(tmb_game_parse(aug.s, &h) == TMB_OK);
    tmb_game_free(h);
    Owned lu, lu_report, rejected;
    REQUIRE(tmb_lu_time(g, "scale:1", "powmax:2", &lu.s) == TMB_OK);
    CHECK(tmb_verify_lu(g, lu.s, "scale:1", "powmax:2", nullptr, 0,
                        &lu_report.s) == TMB_OK);
    CHECK(tmb_lu_time(g, "scale:1", "scale:2", &rejected.s) == TMB_ERR_ARGUMENT);
    tmb_game_free(g);
  }

  TEST_CASE("distances") {
    Owned tv, subset, chain;
    CHECK(tmb_tv(R"([{"outcome": [1], "prob": 1}])",
                 R"([{"outcome": [1], "prob": "1/2"}, {"outcome": [2], "prob": "1/2"}])",
                 &tv.s) == TMB_OK);
    CHECK(tv.str() == "1/2");
    const char* spreads[] = {"4"};
    REQUIRE(tmb_indist_chain(5, 1, spreads, 1, 0, &chain.s) == TMB_OK);
    CHECK(tmb_subset_tv(chain.s, 1, &subset.s) == TMB_OK);
    CHECK(subset.str().find("achieved") != std::string::npos);
  }
}

}  // namespace
