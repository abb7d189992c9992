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

#ifndef TIMEABLE_TIMED_GAME_H_
#define TIMEABLE_TIMED_GAME_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "timeable/distribution.h"
#include "timeable/game.h"
#include "timeable/randomized_timing.h"

namespace timeable {

// Infoset name -> probabilities over its actions.
using BehaviorProfile = std::map<std::string, std::vector<Rational>>;

// The game played when the timing is drawn first and each player observes
// the times of her own nodes.
struct AugmentedGame {
  Game game;
  std::vector<NodeIndex> node_origin;  // kNoNode for the new root
  std::vector<int> node_atom;          // -1 for the new root
  // Augmented infoset name -> (original infoset name, timing information).
  std::map<std::string, std::pair<std::string, Outcome>> infoset_origin;
};

AugmentedGame Augment(const Game& game, const RandomizedTiming& rt,
                      std::size_t budget = kDefaultBudget);

// Copies each original infoset's behaviour to all of its refinements.
BehaviorProfile LiftProfile(const AugmentedGame& augmented,
                            const BehaviorProfile& profile);

// Uniform behaviour at every infoset not owned by `except_player`.
BehaviorProfile UniformProfile(const Game& game, int except_player = 0);

// Exact expected payoff of `player` when every infoset follows `profile`.
Rational ExpectedPayoff(const Game& game, int player,
                        const BehaviorProfile& profile);

struct BestResponse {
  Rational value;
  std::map<std::string, int> choice;  // infoset name -> action index
};

// Backward induction over the player's infosets, deepest experience first.
// Requires perfect recall for the player; ties go to the lowest action.
BestResponse ComputeBestResponse(const Game& game, int player,
                                 const BehaviorProfile& others);

inline Rational BestResponseValue(const Game& game, int player,
                                  const BehaviorProfile& others) {
  return ComputeBestResponse(game, player, others).value;
}

struct AdvantageReport {
  Rational plain;
  Rational augmented;
  Rational gain;
  Rational achieved;
  int max_nodes = 0;  // own nodes per history of the player
  Rational bound;
  bool holds = false;
};

AdvantageReport TimingAdvantage(const Game& game, const RandomizedTiming& rt,
                                int player, const BehaviorProfile& others,
                                std::size_t budget = kDefaultBudget);

// m rounds; chance draws from {1..k}, then the player guesses or passes.
Game GuessingGame(int m, int k);

// Nodes one time unit apart; with probability eps each round's player node
// is delayed by the value chance drew in that round. One delay coin per
// round is shared by all nodes of that round.
RandomizedTiming DelayTiming(const Game& guessing_game, const Rational& eps);

}  // namespace timeable

#endif  // TIMEABLE_TIMED_GAME_H_
