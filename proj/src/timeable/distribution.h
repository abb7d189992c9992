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

#ifndef TIMEABLE_DISTRIBUTION_H_
#define TIMEABLE_DISTRIBUTION_H_

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "timeable/errors.h"
#include "timeable/rational.h"

namespace timeable {

using Outcome = std::vector<Rational>;
using ProbabilityMap = std::map<Outcome, Rational>;

// Finite distribution over equal-arity rational tuples with exact
// probabilities. Zero-probability entries are never stored.
class Distribution {
 public:
  // Drops zero entries; requires positive total 1 and a single arity.
  static Distribution FromMap(ProbabilityMap probs);
  static Distribution PointMass(Outcome outcome);
  // Uniform over the listed outcomes, repeated entries accumulating weight.
  static Distribution Uniform(const std::vector<Outcome>& outcomes);

  int arity() const { return arity_; }
  std::size_t size() const { return probs_.size(); }
  const ProbabilityMap& support() const { return probs_; }
  Rational Prob(const Outcome& outcome) const;

  bool operator==(const Distribution& other) const {
    return arity_ == other.arity_ && probs_ == other.probs_;
  }

 private:
  Distribution(ProbabilityMap probs, int arity)
      : probs_(std::move(probs)), arity_(arity) {}
  ProbabilityMap probs_;
  int arity_ = 0;
};

// Sum over x of max(P_a(x) - P_b(x), 0).
Rational TvDistance(const Distribution& a, const Distribution& b);

Distribution Mixture(const std::vector<Rational>& weights,
                     const std::vector<Distribution>& parts,
                     std::size_t budget = kDefaultBudget);

Distribution Pushforward(const Distribution& d,
                         const std::function<Outcome(const Outcome&)>& f);

// `joint` holds (outcome..., flag) tuples; returns the law of the outcome
// coordinates given that the last coordinate equals `flag`.
Distribution Condition(const Distribution& joint, const Rational& flag);

Rational Expectation(const Distribution& d);

}  // namespace timeable

#endif  // TIMEABLE_DISTRIBUTION_H_
