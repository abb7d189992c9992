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

#include "timeable/perception.h"

#include <algorithm>

#include "timeable/distribution.h"
#include "timeable/exact_timing.h"

namespace timeable {

ClockBound ClockBound::Scale(Rational q) {
  Require(q > 0, "clock bound: scale factor must be positive");
  ClockBound b;
  b.kind = Kind::kScale;
  b.q = std::move(q);
  return b;
}

ClockBound ClockBound::PowMax(int k) {
  Require(k >= 1, "clock bound: power must be at least 1");
  ClockBound b;
  b.kind = Kind::kPowMax;
  b.k = k;
  return b;
}

ClockBound ClockBound::Parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    Fail(ErrorCode::kParse, "clock bound \"" + std::string(text) +
                                "\" must look like scale:q or powmax:k");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (family == "scale") return Scale(ParseRational(arg));
  if (family == "powmax") {
    const Rational k = ParseRational(arg);
    if (!IsInteger(k) || k < 1 || k > 64) {
      Fail(ErrorCode::kParse, "clock bound: powmax needs an integer 1..64");
    }
    return PowMax(static_cast<int>(k.get_num().get_si()));
  }
  Fail(ErrorCode::kParse,
       "clock bound: unknown family \"" + std::string(family) + "\"");
}

Rational ClockBound::operator()(const Rational& t) const {
  if (kind == Kind::kScale) return q * t;
  return std::max(t, Pow(t, k));
}

std::string ClockBound::ToString() const {
  return kind == Kind::kScale ? "scale:" + FormatRational(q)
                              : "powmax:" + std::to_string(k);
}

bool ClockBound::IsLower() const {
  return kind == Kind::kScale ? q <= 1 : k == 1;
}

bool ClockBound::IsUpper() const {
  return kind == Kind::kScale ? q >= 1 : true;
}

namespace {

void CheckRoles(const ClockBound& lower, const ClockBound& upper) {
  Require(lower.IsLower(), "clock bound " + lower.ToString() +
                               " is not below the identity");
  Require(upper.IsUpper(), "clock bound " + upper.ToString() +
                               " is not above the identity");
}

}  // namespace

LuReport VerifyLuTiming(const Game& game, const PerceivedTiming& pt,
                        const ClockBound& lower, const ClockBound& upper,
                        std::size_t budget) {
  CheckRoles(lower, upper);
  Require(!pt.atoms.empty(), "perceived timing: no atoms");
  CheckBudget(pt.atoms.size(), budget, "perceived timing verification");
  Rational total = 0;
  for (const PerceivedAtom& atom : pt.atoms) {
    Require(atom.prob > 0, "perceived timing: non-positive probability");
    Require(static_cast<int>(atom.xy.size()) == game.num_nodes(),
            "perceived timing: node count mismatch");
    total += atom.prob;
  }
  Require(total == 1, "perceived timing: probabilities sum to " +
                          FormatRational(total));

  LuReport report;
  auto fail = [&report](const std::string& what) {
    if (report.structural_ok) report.violation = what;
    report.structural_ok = false;
  };
  std::vector<std::vector<NodeIndex>> own(game.num_nodes());
  for (NodeIndex w = 0; w < game.num_nodes(); ++w) {
    if (game.is_decision(w)) own[w] = OwnPath(game, w, game.node(w).player);
  }
  for (std::size_t a = 0; a < pt.atoms.size() && report.structural_ok; ++a) {
    const auto& xy = pt.atoms[a].xy;
    const std::string where = "atom " + std::to_string(a) + ": ";
    DeterministicTiming x;
    for (const auto& [xv, yv] : xy) {
      if (xv < 0 || yv < 0) fail(where + "negative time");
      x.times.push_back(xv);
    }
    if (std::string issue = CheckTiming(game, x); !issue.empty()) {
      fail(where + issue);
    }
    for (NodeIndex w = 0; w < game.num_nodes() && report.structural_ok; ++w) {
      for (NodeIndex v : own[w]) {
        if (v == w) continue;
        const Rational dx = xy[w].first - xy[v].first;
        const Rational dy = xy[w].second - xy[v].second;
        if (dy < lower(dx) || dy > upper(dx)) {
          fail(where + "nodes " + std::to_string(game.node(v).id) + " and " +
               std::to_string(game.node(w).id) + " perceive " +
               FormatRational(dy) + " for an actual gap of " +
               FormatRational(dx));
          break;
        }
      }
    }
  }

  for (int i = 0; i < game.num_infosets(); ++i) {
    const auto& nodes = game.infoset_nodes(i);
    std::vector<Distribution> laws;
    for (NodeIndex v : nodes) {
      ProbabilityMap probs;
      for (const PerceivedAtom& atom : pt.atoms) {
        Outcome y;
        for (NodeIndex u : own[v]) y.push_back(atom.xy[u].second);
        probs[std::move(y)] += atom.prob;
      }
      laws.push_back(Distribution::FromMap(std::move(probs)));
    }
    for (std::size_t a = 0; a < laws.size(); ++a) {
      for (std::size_t b = a + 1; b < laws.size(); ++b) {
        if (laws[a].arity() != laws[b].arity() || laws[a] == laws[b]) continue;
        Rational tv = TvDistance(laws[a], laws[b]);
        if (tv > report.achieved) {
          report.achieved = tv;
          report.infoset = i;
          report.node_a = nodes[a];
          report.node_b = nodes[b];
        }
      }
    }
  }
  return report;
}

PerceivedTiming ConstructLuTiming(const Game& game, const ClockBound& lower,
                                  const ClockBound& upper) {
  CheckRoles(lower, upper);
  if (upper.kind != ClockBound::Kind::kPowMax || upper.k < 2) {
    Fail(ErrorCode::kArgument,
         "lu timing: " + lower.ToString() + " and " + upper.ToString() +
             " differ by a bounded factor; constant-factor clocks cannot use "
             "this construction");
  }
  const Rational slope =
      lower.kind == ClockBound::Kind::kScale ? lower.q : Rational(1);
  const int m = game.max_depth() + 1;
  const Rational target = Rational(m) * m * slope;
  BigInt t0 = 1;
  while (Rational(Pow(Rational(t0), upper.k - 1)) < target) t0 *= 2;
  const Rational step = lower(Rational(m) * Rational(t0));

  PerceivedAtom atom;
  atom.prob = 1;
  atom.xy.resize(game.num_nodes());
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    Rational y = 0;
    if (game.is_decision(v)) {
      y = step * static_cast<long>(OwnPath(game, v, game.node(v).player).size());
    }
    atom.xy[v] = {Rational(t0) * game.depth(v), std::move(y)};
  }
  return PerceivedTiming{{std::move(atom)}};
}

}  // namespace timeable
