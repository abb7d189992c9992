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

#ifndef TIMEABLE_CHAIN_H_
#define TIMEABLE_CHAIN_H_

#include <cstddef>
#include <memory>
#include <vector>

#include "timeable/distribution.h"
#include "timeable/game.h"
#include "timeable/randomized_timing.h"

namespace timeable {

// Distribution of strictly increasing positive integer tuples, kept in the
// factored form Y = W + U(1,...,1) where W ranges over integer offset
// tuples and U is uniform on {0, ..., spread-1} independently of W.
class ChainDistribution {
 public:
  static ChainDistribution Create(Distribution offsets, BigInt spread);
  // Any distribution over strictly increasing positive integer tuples.
  static ChainDistribution FromDistribution(Distribution d);

  int arity() const { return offsets_.arity(); }
  const Distribution& offsets() const { return offsets_; }
  const BigInt& spread() const { return spread_; }
  BigInt SupportBound() const;  // offsets.size() * spread
  BigInt MaxValue() const;

  Distribution Materialize(std::size_t budget = kDefaultBudget) const;

 private:
  ChainDistribution(Distribution offsets, BigInt spread)
      : offsets_(std::move(offsets)), spread_(std::move(spread)) {}
  Distribution offsets_;
  BigInt spread_;
};

// X1 uniform on {1..N-k}, X2 = X1 + k.
ChainDistribution IndistBase(int n, int k);

// Y1 uniform on {1..B}; Y(i+1) - Y(i) uniform on {1..2^X(i)} given the
// inner outcome X, independently across i.
ChainDistribution IndistRecursive(const ChainDistribution& inner,
                                  const BigInt& b,
                                  std::size_t budget = kDefaultBudget);

// Distance between the laws of the coordinates selected by two index sets
// (0-based, increasing).
Rational SubsetTv(const ChainDistribution& cd, const std::vector<int>& s,
                  const std::vector<int>& t);

struct SubsetReport {
  Rational achieved = 0;
  std::vector<int> subset_a;
  std::vector<int> subset_b;
};

// Maximum over all pairs of m-subsets of coordinate indices.
SubsetReport VerifyIndistinguishableSubsets(const ChainDistribution& cd,
                                            int m);

// Root at 0; a node at depth d gets the d-th coordinate. One atom per
// outcome.
RandomizedTiming TimingFromChain(const Game& game,
                                 const ChainDistribution& cd,
                                 std::size_t budget = kDefaultBudget);

// Sampler for the same timing without materializing the chain.
std::unique_ptr<TimingSampler> ChainSampler(const Game& game,
                                            const ChainDistribution& cd);

}  // namespace timeable

#endif  // TIMEABLE_CHAIN_H_
