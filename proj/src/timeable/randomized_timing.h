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

#ifndef TIMEABLE_RANDOMIZED_TIMING_H_
#define TIMEABLE_RANDOMIZED_TIMING_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "timeable/distribution.h"
#include "timeable/errors.h"
#include "timeable/exact_timing.h"
#include "timeable/game.h"

namespace timeable {

struct TimingAtom {
  Rational prob;
  DeterministicTiming timing;
};

struct RandomizedTiming {
  std::vector<TimingAtom> atoms;
};

// Throws Error(kInvalid) unless every atom is a timing of the game and the
// probabilities are positive and sum to 1.
void CheckRandomizedTiming(const Game& game, const RandomizedTiming& rt);

RandomizedTiming Lift(const DeterministicTiming& t);

// Law of the times of the owning player's nodes on the root path to v,
// v included.
Distribution TimingInformation(const Game& game, const RandomizedTiming& rt,
                               NodeIndex v,
                               std::size_t budget = kDefaultBudget);

struct EpsilonReport {
  Rational achieved = 0;
  int infoset = -1;  // infoset attaining the maximum, -1 when none
  NodeIndex node_a = kNoNode;
  NodeIndex node_b = kNoNode;
};

// Maximum over infosets and node pairs of the timing-information distance.
EpsilonReport VerifyEpsilonTiming(const Game& game, const RandomizedTiming& rt,
                                  std::size_t budget = kDefaultBudget);

// Probability of the atoms in which every decision node's timing
// information lies in the support of every node of its infoset.
Rational LeakFreeProbability(const Game& game, const RandomizedTiming& rt,
                             std::size_t budget = kDefaultBudget);

// Node-wise expected time.
DeterministicTiming ExpectedTiming(const Game& game,
                                   const RandomizedTiming& rt);

// Window timing for games shaped like the two-stage coin game: a chance
// root whose subtrees hold a first mover and possibly a second mover of the
// other player. i is uniform on 1..N-1, the first mover plays at i and the
// second at i+1.
RandomizedTiming ShiftedWindowTiming(const Game& game, int n);

class TimingSampler {
 public:
  virtual ~TimingSampler() = default;
  virtual void Sample(std::mt19937_64& rng,
                      std::vector<Rational>& times) const = 0;
};

std::unique_ptr<TimingSampler> AtomSampler(const RandomizedTiming& rt);

struct EstimateReport {
  double estimate = 0;
  double standard_error = 0;
  double plug_in = 0;  // max plain empirical distance
  int infoset = -1;
  NodeIndex node_a = kNoNode;
  NodeIndex node_b = kNoNode;
  std::size_t samples = 0;
};

// Split-sample estimate of the worst infoset pair distance. Each node draws
// from its own stream seeded by (seed, node), so results do not depend on
// evaluation order.
EstimateReport EstimateEpsilonTiming(const Game& game,
                                     const TimingSampler& sampler,
                                     std::uint64_t seed, std::size_t samples);

}  // namespace timeable

#endif  // TIMEABLE_RANDOMIZED_TIMING_H_
