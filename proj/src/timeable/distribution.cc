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

#include "timeable/distribution.h"

#include <utility>

namespace timeable {

Distribution Distribution::FromMap(ProbabilityMap probs) {
  int arity = -1;
  Rational total = 0;
  for (auto it = probs.begin(); it != probs.end();) {
    if (it->second < 0) {
      Fail(ErrorCode::kInvalid, "distribution: negative probability");
    }
    if (it->second == 0) {
      it = probs.erase(it);
      continue;
    }
    const int a = static_cast<int>(it->first.size());
    if (arity >= 0 && a != arity) {
      Fail(ErrorCode::kInvalid, "distribution: outcomes of mixed arity");
    }
    arity = a;
    total += it->second;
    ++it;
  }
  if (probs.empty()) Fail(ErrorCode::kInvalid, "distribution: empty support");
  if (total != 1) {
    Fail(ErrorCode::kInvalid,
         "distribution: probabilities sum to " + FormatRational(total));
  }
  return Distribution(std::move(probs), arity);
}

Distribution Distribution::PointMass(Outcome outcome) {
  ProbabilityMap probs;
  const int arity = static_cast<int>(outcome.size());
  probs.emplace(std::move(outcome), Rational(1));
  return Distribution(std::move(probs), arity);
}

Distribution Distribution::Uniform(const std::vector<Outcome>& outcomes) {
  Require(!outcomes.empty(), "uniform distribution over no outcomes");
  const Rational w(1, outcomes.size());
  ProbabilityMap probs;
  for (const Outcome& o : outcomes) probs[o] += w;
  return FromMap(std::move(probs));
}

Rational Distribution::Prob(const Outcome& outcome) const {
  auto it = probs_.find(outcome);
  return it == probs_.end() ? Rational(0) : it->second;
}

Rational TvDistance(const Distribution& a, const Distribution& b) {
  Require(a.arity() == b.arity(), "tv distance: arity mismatch");
  Rational tv = 0;
  auto ib = b.support().begin();
  const auto eb = b.support().end();
  for (const auto& [x, p] : a.support()) {
    while (ib != eb && ib->first < x) ++ib;
    if (ib != eb && ib->first == x) {
      if (p > ib->second) tv += p - ib->second;
    } else {
      tv += p;
    }
  }
  return tv;
}

Distribution Mixture(const std::vector<Rational>& weights,
                     const std::vector<Distribution>& parts,
                     std::size_t budget) {
  Require(!weights.empty() && weights.size() == parts.size(),
          "mixture: weights and parts differ in length");
  Rational total = 0;
  for (const Rational& w : weights) {
    Require(w > 0, "mixture: weights must be positive");
    total += w;
  }
  if (total != 1) {
    Fail(ErrorCode::kArgument,
         "mixture: weights sum to " + FormatRational(total));
  }
  ProbabilityMap probs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Require(parts[i].arity() == parts[0].arity(), "mixture: arity mismatch");
    for (const auto& [x, p] : parts[i].support()) probs[x] += weights[i] * p;
    CheckBudget(probs.size(), budget, "mixture");
  }
  return Distribution::FromMap(std::move(probs));
}

Distribution Pushforward(const Distribution& d,
                         const std::function<Outcome(const Outcome&)>& f) {
  ProbabilityMap probs;
  for (const auto& [x, p] : d.support()) probs[f(x)] += p;
  return Distribution::FromMap(std::move(probs));
}

Distribution Condition(const Distribution& joint, const Rational& flag) {
  Require(joint.arity() >= 1, "condition: joint has no flag coordinate");
  ProbabilityMap probs;
  Rational mass = 0;
  for (const auto& [x, p] : joint.support()) {
    if (x.back() != flag) continue;
    probs[Outcome(x.begin(), x.end() - 1)] += p;
    mass += p;
  }
  Require(mass > 0, "condition: conditioning event has probability zero");
  for (auto& [x, p] : probs) p /= mass;
  return Distribution::FromMap(std::move(probs));
}

Rational Expectation(const Distribution& d) {
  Require(d.arity() == 1, "expectation: arity must be 1");
  Rational mean = 0;
  for (const auto& [x, p] : d.support()) mean += x[0] * p;
  return mean;
}

}  // namespace timeable
