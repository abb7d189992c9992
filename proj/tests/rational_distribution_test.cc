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

#include "doctest.h"
#include "test_util.h"
#include "timeable/distribution.h"
#include "timeable/errors.h"
#include "timeable/rational.h"

namespace timeable {
namespace {

using testing::RandInt;
using testing::RandomDistribution;
using testing::RandomWeights;
using testing::Rng;

Distribution Pm(int x) { return Distribution::PointMass({Rational(x)}); }

Distribution UniformRange(int lo, int hi) {
  std::vector<Outcome> xs;
  for (int x = lo; x <= hi; ++x) xs.push_back({Rational(x)});
  return Distribution::Uniform(xs);
}

TEST_SUITE("rational") {
  TEST_CASE("parse and format") {
    CHECK(FormatRational(ParseRational("6/4")) == "3/2");
    CHECK_THROWS_AS(ParseRational("-2/-4"), Error);
    CHECK(FormatRational(ParseRational("+7")) == "7");
    CHECK(FormatRational(ParseRational("-1.25")) == "-5/4");
    CHECK(FormatRational(ParseRational("0.0")) == "0");
    CHECK(FormatTuple({Rational(1), Rational(1, 3)}) == "(1,1/3)");
  }

  TEST_CASE("malformed text is a parse error") {
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "3e2", ".", "--1"}) {
      CAPTURE(bad);
      try {
        ParseRational(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kParse);
      }
    }
  }

  TEST_CASE("floor ceil and powers") {
    CHECK(Floor(Rational(-1, 2)) == -1);
    CHECK(Ceil(Rational(-1, 2)) == 0);
    CHECK(Floor(Rational(7, 2)) == 3);
    CHECK(Pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Pow2(70) == BigInt("1180591620717411303424"));
  }
}

TEST_SUITE("distribution") {
  TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(Distribution::FromMap({}), Error);
    CHECK_THROWS_AS(Distribution::FromMap({{{Rational(0)}, Rational(1, 2)}}),
                    Error);
    CHECK_THROWS_AS(
        Distribution::FromMap({{{Rational(0)}, Rational(3, 2)},
                               {{Rational(1)}, Rational(-1, 2)}}),
        Error);
    CHECK_THROWS_AS(
        Distribution::FromMap({{{Rational(0)}, Rational(1, 2)},
                               {{Rational(0), Rational(1)}, Rational(1, 2)}}),
        Error);
    const Distribution d = Distribution::FromMap(
        {{{Rational(0)}, Rational(1)}, {{Rational(1)}, Rational(0)}});
    CHECK(d.size() == 1);
  }

  TEST_CASE("tv examples") {
    CHECK(TvDistance(Pm(1), Pm(1)) == 0);
    CHECK(TvDistance(Pm(1), Pm(2)) == 1);
    CHECK(TvDistance(UniformRange(1, 4), UniformRange(2, 5)) == Rational(1, 4));
    CHECK_THROWS_AS(
        TvDistance(Pm(1), Distribution::PointMass({Rational(1), Rational(2)})),
        Error);
  }

  TEST_CASE("mixture pushforward condition expectation examples") {
    CHECK(Mixture({Rational(1)}, {UniformRange(1, 3)}) == UniformRange(1, 3));
    CHECK(Mixture({Rational(1, 2), Rational(1, 2)}, {Pm(0), Pm(1)}) ==
          UniformRange(0, 1));
    CHECK_THROWS_AS(Mixture({Rational(1, 2)}, {Pm(0)}), Error);
    const Distribution halves = Distribution::FromMap(
        {{{Rational(1, 2)}, Rational(1, 2)}, {{Rational(3, 2)}, Rational(1, 2)}});
    const Distribution floored = Pushforward(halves, [](const Outcome& x) {
      return Outcome{Rational(Floor(x[0]))};
    });
    CHECK(floored == UniformRange(0, 1));
    const Distribution joint = Distribution::FromMap(
        {{{Rational(0), Rational(1)}, Rational(1, 2)},
         {{Rational(1), Rational(0)}, Rational(1, 2)}});
    CHECK(Condition(joint, Rational(1)) == Pm(0));
    CHECK_THROWS_AS(Condition(joint, Rational(2)), Error);
    CHECK(Expectation(UniformRange(1, 3)) == 2);
    CHECK(Expectation(Distribution::FromMap({{{Rational(0)}, Rational(1, 4)},
                                             {{Rational(1)}, Rational(3, 4)}})) ==
          Rational(3, 4));
  }

  TEST_CASE("tv is a metric") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      const int arity = RandInt(rng, 1, 2);
      const Distribution a = RandomDistribution(rng, arity, 5, 0, 3);
      const Distribution b = RandomDistribution(rng, arity, 5, 0, 3);
      const Distribution c = RandomDistribution(rng, arity, 5, 0, 3);
      CHECK(TvDistance(a, b) == TvDistance(b, a));
      CHECK(TvDistance(a, a) == 0);
      CHECK((TvDistance(a, b) == 0) == (a == b));
      CHECK(TvDistance(a, c) <= TvDistance(a, b) + TvDistance(b, c));
      CHECK(TvDistance(a, b) >= 0);
      CHECK(TvDistance(a, b) <= 1);
    }
  }

  TEST_CASE("tv equals half the l1 distance") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
      const Distribution a = RandomDistribution(rng, 1, 6, 0, 4);
      const Distribution b = RandomDistribution(rng, 1, 6, 0, 4);
      Rational l1 = 0;
      for (int x = 0; x <= 4; ++x) {
        const Rational d = a.Prob({Rational(x)}) - b.Prob({Rational(x)});
        l1 += d < 0 ? Rational(-d) : d;
      }
      CHECK(TvDistance(a, b) * 2 == l1);
    }
  }

  TEST_CASE("mixtures sum to one and budget is enforced") {
    Rng rng(13);
    const Distribution a = UniformRange(0, 99);
    const Distribution b = UniformRange(100, 199);
    CHECK_THROWS_AS(Mixture({Rational(1, 2), Rational(1, 2)}, {a, b}, 150),
                    Error);
    const auto w = RandomWeights(rng, 3);
    const Distribution m = Mixture(w, {Pm(0), Pm(1), Pm(0)});
    CHECK(m.Prob({Rational(0)}) == w[0] + w[2]);
  }
}

}  // namespace
}  // namespace timeable
