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

#ifndef TIMEABLE_PERCEPTION_H_
#define TIMEABLE_PERCEPTION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "timeable/errors.h"
#include "timeable/game.h"
#include "timeable/rational.h"

namespace timeable {

// scale(q): t -> q t.  powmax(k): t -> max(t, t^k).
struct ClockBound {
  enum class Kind { kScale, kPowMax };
  Kind kind = Kind::kScale;
  Rational q = 1;
  int k = 1;

  static ClockBound Scale(Rational q);
  static ClockBound PowMax(int k);
  // "scale:1/2" or "powmax:2".
  static ClockBound Parse(std::string_view text);

  Rational operator()(const Rational& t) const;
  std::string ToString() const;
  bool IsLower() const;  // f(t) <= t for t >= 0
  bool IsUpper() const;  // f(t) >= t for t >= 0
};

// Actual time x and perceived time y of every node.
struct PerceivedAtom {
  Rational prob;
  std::vector<std::pair<Rational, Rational>> xy;
};

struct PerceivedTiming {
  std::vector<PerceivedAtom> atoms;
};

struct LuReport {
  bool structural_ok = true;
  std::string violation;  // first structural violation
  Rational achieved = 0;  // over perceived timing information
  int infoset = -1;
  NodeIndex node_a = kNoNode;
  NodeIndex node_b = kNoNode;
};

LuReport VerifyLuTiming(const Game& game, const PerceivedTiming& pt,
                        const ClockBound& lower, const ClockBound& upper,
                        std::size_t budget = kDefaultBudget);

// Single deterministic atom with x = depth t0 and y = ordinal l(M t0) on
// decision nodes. Requires an upper bound powmax(k >= 2) against a linear
// lower bound.
PerceivedTiming ConstructLuTiming(const Game& game, const ClockBound& lower,
                                  const ClockBound& upper);

}  // namespace timeable

#endif  // TIMEABLE_PERCEPTION_H_
