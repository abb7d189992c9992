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

#include "timeable/timed_game.h"

#include <algorithm>
#include <functional>
#include <optional>

namespace timeable {

AugmentedGame Augment(const Game& game, const RandomizedTiming& rt,
                      std::size_t budget) {
  CheckRandomizedTiming(game, rt);
  const std::size_t n = game.num_nodes();
  CheckBudget(rt.atoms.size() * n, budget, "augment");

  GameSpec spec;
  spec.players = game.spec().players;
  spec.nodes.reserve(rt.atoms.size() * n + 1);
  std::vector<NodeIndex> node_origin = {kNoNode};
  std::vector<int> node_atom = {-1};
  std::map<std::string, std::pair<std::string, Outcome>> infoset_origin;
  Node root;
  root.id = 0;
  root.kind = NodeKind::kChance;
  spec.nodes.push_back(root);

  for (std::size_t a = 0; a < rt.atoms.size(); ++a) {
    const DeterministicTiming& t = rt.atoms[a].timing;
    const NodeIndex base = static_cast<NodeIndex>(spec.nodes.size());
    // Copies keep the original node order, so child k of copy v is
    // base + original child index.
    for (NodeIndex v = 0; v < static_cast<NodeIndex>(n); ++v) {
      Node copy = game.node(v);
      copy.id = base + v;
      for (Edge& e : copy.children) e.child += base;
      if (copy.kind == NodeKind::kDecision) {
        Outcome tuple;
        for (NodeIndex u : OwnPath(game, v, copy.player)) {
          tuple.push_back(t.times[u]);
        }
        std::string name = copy.infoset + "@" + FormatTuple(tuple);
        infoset_origin.emplace(name,
                                   std::make_pair(copy.infoset, tuple));
        copy.infoset = std::move(name);
      }
      spec.nodes.push_back(std::move(copy));
      node_origin.push_back(v);
      node_atom.push_back(static_cast<int>(a));
    }
    spec.nodes[0].children.push_back(
        Edge{base + game.root(), "atom" + std::to_string(a),
             rt.atoms[a].prob});
  }
  return AugmentedGame{Game::Build(std::move(spec)), std::move(node_origin),
                       std::move(node_atom), std::move(infoset_origin)};
}

BehaviorProfile LiftProfile(const AugmentedGame& augmented,
                            const BehaviorProfile& profile) {
  BehaviorProfile lifted;
  for (const auto& [name, origin] : augmented.infoset_origin) {
    auto it = profile.find(origin.first);
    if (it != profile.end()) lifted.emplace(name, it->second);
  }
  return lifted;
}

BehaviorProfile UniformProfile(const Game& game, int except_player) {
  BehaviorProfile profile;
  for (int i = 0; i < game.num_infosets(); ++i) {
    if (game.infoset_player(i) == except_player) continue;
    const int arity = game.infoset_arity(i);
    profile.emplace(game.infoset_name(i),
                    std::vector<Rational>(arity, Rational(1, arity)));
  }
  return profile;
}

namespace {

const std::vector<Rational>& LookupBehavior(const Game& game, int infoset,
                                            const BehaviorProfile& profile) {
  const std::string& name = game.infoset_name(infoset);
  auto it = profile.find(name);
  if (it == profile.end()) {
    Fail(ErrorCode::kArgument, "profile: no behaviour for infoset \"" + name +
                                   "\"");
  }
  const std::vector<Rational>& sigma = it->second;
  if (static_cast<int>(sigma.size()) != game.infoset_arity(infoset)) {
    Fail(ErrorCode::kArgument,
         "profile: infoset \"" + name + "\" expects " +
             std::to_string(game.infoset_arity(infoset)) + " probabilities");
  }
  Rational total = 0;
  for (const Rational& q : sigma) {
    if (q < 0) {
      Fail(ErrorCode::kArgument,
           "profile: negative probability at \"" + name + "\"");
    }
    total += q;
  }
  if (total != 1) {
    Fail(ErrorCode::kArgument, "profile: probabilities at \"" + name +
                                   "\" sum to " + FormatRational(total));
  }
  return sigma;
}

// Bottom-up values where `decide` fixes the player's own nodes.
class ValueTable {
 public:
  ValueTable(const Game& game, int player, const BehaviorProfile& others,
             const std::vector<int>* choice)
      : game_(game), player_(player), others_(others), choice_(choice),
        memo_(game.num_nodes()) {}

  const Rational& Eval(NodeIndex v) {
    if (memo_[v]) return *memo_[v];
    std::vector<std::pair<NodeIndex, bool>> stack = {{v, false}};
    while (!stack.empty()) {
      auto [u, ready] = stack.back();
      stack.pop_back();
      if (memo_[u]) continue;
      const Node& node = game_.node(u);
      if (node.kind == NodeKind::kLeaf) {
        memo_[u] = node.payoffs[player_ - 1];
        continue;
      }
      const bool own = node.kind == NodeKind::kDecision &&
                       node.player == player_ && choice_ != nullptr;
      if (!ready) {
        stack.emplace_back(u, true);
        if (own) {
          const int a = (*choice_)[game_.infoset_of(u)];
          if (a < 0) Fail(ErrorCode::kArgument, "best response: recall order");
          stack.emplace_back(node.children[a].child, false);
        } else {
          for (const Edge& e : node.children) stack.emplace_back(e.child, false);
        }
        continue;
      }
      Rational value = 0;
      if (own) {
        value = *memo_[node.children[(*choice_)[game_.infoset_of(u)]].child];
      } else if (node.kind == NodeKind::kChance) {
        for (const Edge& e : node.children) value += *e.prob * *memo_[e.child];
      } else {
        const auto& sigma =
            LookupBehavior(game_, game_.infoset_of(u), others_);
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          if (sigma[a] != 0) value += sigma[a] * *memo_[node.children[a].child];
        }
      }
      memo_[u] = std::move(value);
    }
    return *memo_[v];
  }

 private:
  const Game& game_;
  int player_;
  const BehaviorProfile& others_;
  const std::vector<int>* choice_;
  std::vector<std::optional<Rational>> memo_;
};

}  // namespace

Rational ExpectedPayoff(const Game& game, int player,
                        const BehaviorProfile& profile) {
  Require(player >= 1 && player <= game.num_players(), "unknown player");
  ValueTable table(game, player, profile, nullptr);
  return table.Eval(game.root());
}

BestResponse ComputeBestResponse(const Game& game, int player,
                                 const BehaviorProfile& others) {
  Require(player >= 1 && player <= game.num_players(), "unknown player");
  const ValidationReport report = Validate(game);
  if (!report.player_recall[player - 1]) {
    Fail(ErrorCode::kInvalid, "best response: player " +
                                  std::to_string(player) +
                                  " does not have perfect recall");
  }
  // Reach probabilities excluding the player's own choices.
  std::vector<Rational> reach(game.num_nodes());
  std::vector<int> own_count(game.num_nodes(), 0);
  reach[game.root()] = 1;
  for (NodeIndex v : game.preorder()) {
    const Node& node = game.node(v);
    const bool own =
        node.kind == NodeKind::kDecision && node.player == player;
    const std::vector<Rational>* sigma = nullptr;
    if (node.kind == NodeKind::kDecision && !own) {
      sigma = &LookupBehavior(game, game.infoset_of(v), others);
    }
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      const NodeIndex c = node.children[a].child;
      own_count[c] = own_count[v] + (own ? 1 : 0);
      if (node.kind == NodeKind::kChance) {
        reach[c] = reach[v] * *node.children[a].prob;
      } else if (own) {
        reach[c] = reach[v];
      } else {
        reach[c] = reach[v] * (*sigma)[a];
      }
    }
  }

  std::vector<int> order;
  for (int i = 0; i < game.num_infosets(); ++i) {
    if (game.infoset_player(i) == player) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return own_count[game.infoset_nodes(a).front()] >
           own_count[game.infoset_nodes(b).front()];
  });

  std::vector<int> choice(game.num_infosets(), -1);
  ValueTable table(game, player, others, &choice);
  BestResponse out;
  for (int i : order) {
    int best = -1;
    Rational best_value;
    for (int a = 0; a < game.infoset_arity(i); ++a) {
      Rational value = 0;
      for (NodeIndex h : game.infoset_nodes(i)) {
        if (reach[h] == 0) continue;
        value += reach[h] * table.Eval(game.node(h).children[a].child);
      }
      if (best < 0 || value > best_value) {
        best = a;
        best_value = std::move(value);
      }
    }
    choice[i] = best;
    out.choice.emplace(game.infoset_name(i), best);
  }
  out.value = table.Eval(game.root());
  return out;
}

AdvantageReport TimingAdvantage(const Game& game, const RandomizedTiming& rt,
                                int player, const BehaviorProfile& others,
                                std::size_t budget) {
  Require(player >= 1 && player <= game.num_players(), "unknown player");
  const ValidationReport report = Validate(game);
  if (!report.payoffs_in_unit_interval) {
    Fail(ErrorCode::kInvalid, "advantage: payoffs must lie in [0,1]");
  }
  AdvantageReport out;
  out.plain = BestResponseValue(game, player, others);
  const AugmentedGame augmented = Augment(game, rt, budget);
  out.augmented = BestResponseValue(augmented.game, player,
                                    LiftProfile(augmented, others));
  out.gain = out.augmented - out.plain;
  out.achieved = VerifyEpsilonTiming(game, rt, budget).achieved;
  out.max_nodes = report.max_nodes_per_history[player - 1];
  out.bound = out.max_nodes * out.achieved;
  out.holds = out.gain <= out.bound;
  return out;
}

Game GuessingGame(int m, int k) {
  Require(m >= 1 && k >= 2, "guessing game: need m >= 1 and k >= 2");
  GameSpec spec;
  spec.players = {"player"};
  auto add = [&spec](Node node) {
    node.id = static_cast<std::int64_t>(spec.nodes.size());
    spec.nodes.push_back(std::move(node));
    return static_cast<NodeIndex>(spec.nodes.size() - 1);
  };
  std::function<NodeIndex(int, const std::vector<int>&)> round =
      [&](int r, const std::vector<int>& past) -> NodeIndex {
    Node chance;
    chance.kind = NodeKind::kChance;
    const NodeIndex c = add(chance);
    std::string set = "round" + std::to_string(r);
    if (!past.empty()) {
      set += "[";
      for (std::size_t i = 0; i < past.size(); ++i) {
        set += (i ? "," : "") + std::to_string(past[i]);
      }
      set += "]";
    }
    for (int value = 1; value <= k; ++value) {
      Node decision;
      decision.kind = NodeKind::kDecision;
      decision.player = 1;
      decision.infoset = set;
      const NodeIndex d = add(decision);
      spec.nodes[c].children.push_back(
          Edge{d, std::to_string(value), Rational(1, k)});
      for (int guess = 1; guess <= k; ++guess) {
        Node leaf;
        leaf.payoffs = {Rational(guess == value ? 1 : 0)};
        const NodeIndex l = add(leaf);
        spec.nodes[d].children.push_back(
            Edge{l, "guess" + std::to_string(guess), std::nullopt});
      }
      if (r < m) {
        std::vector<int> next = past;
        next.push_back(value);
        const NodeIndex sub = round(r + 1, next);
        spec.nodes[d].children.push_back(Edge{sub, "pass", std::nullopt});
      }
    }
    return c;
  };
  spec.root = round(1, {});
  return Game::Build(std::move(spec));
}

RandomizedTiming DelayTiming(const Game& game, const Rational& eps) {
  Require(eps > 0 && eps < 1, "delay timing: need 0 < eps < 1");
  auto shape_error = [] {
    Fail(ErrorCode::kArgument, "delay timing: not a guessing game");
  };
  if (game.node(game.root()).kind != NodeKind::kChance) shape_error();
  int rounds = 0;
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    const Node& node = game.node(v);
    if (node.kind == NodeKind::kLeaf) continue;
    const int d = game.depth(v);
    const bool chance_layer = d % 2 == 0;
    if (chance_layer != (node.kind == NodeKind::kChance)) shape_error();
    rounds = std::max(rounds, d / 2 + 1);
  }
  Require(rounds <= 20, "delay timing: too many rounds");
  RandomizedTiming rt;
  for (unsigned mask = 0; mask < (1u << rounds); ++mask) {
    Rational prob = 1;
    for (int r = 0; r < rounds; ++r) {
      prob *= (mask >> r) & 1 ? eps : 1 - eps;
    }
    DeterministicTiming t;
    t.times.assign(game.num_nodes(), Rational(0));
    for (NodeIndex v : game.preorder()) {
      if (v == game.root()) continue;
      const NodeIndex p = game.parent(v);
      Rational time = t.times[p] + 1;
      if (game.is_decision(v) && ((mask >> (game.depth(v) / 2)) & 1)) {
        time += game.child_position(v) + 1;
      }
      t.times[v] = std::move(time);
    }
    rt.atoms.push_back({std::move(prob), std::move(t)});
  }
  return rt;
}

}  // namespace timeable
