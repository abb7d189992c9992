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

#ifndef TIMEABLE_GAME_H_
#define TIMEABLE_GAME_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "timeable/rational.h"

namespace timeable {

using NodeIndex = int;
inline constexpr NodeIndex kNoNode = -1;

enum class NodeKind { kChance, kDecision, kLeaf };

std::string_view KindName(NodeKind kind);

struct Edge {
  NodeIndex child = kNoNode;  // position in GameSpec::nodes
  std::string action;
  std::optional<Rational> prob;  // chance edges only
};

struct Node {
  std::int64_t id = 0;  // identifier used by documents
  NodeKind kind = NodeKind::kLeaf;
  int player = 0;        // 1-based; 0 when absent
  std::string infoset;   // decision nodes only; empty when absent
  std::vector<Edge> children;
  std::vector<Rational> payoffs;  // leaves only
};

// Raw, possibly invalid game data. Validate() reports on it; Game::Build()
// accepts only data passing the structural checks.
struct GameSpec {
  std::vector<std::string> players;
  std::vector<Node> nodes;
  NodeIndex root = 0;
};

struct ValidationReport {
  bool tree_ok = true;
  bool kinds_ok = true;
  bool chance_ok = true;
  bool infosets_ok = true;
  bool payoff_lengths_ok = true;
  // Only meaningful when structurally_ok().
  bool perfect_recall = false;
  std::vector<bool> player_recall;  // index p-1
  bool payoffs_in_unit_interval = false;
  std::vector<int> max_nodes_per_history;  // m_p, index p-1
  std::vector<std::string> issues;

  bool structurally_ok() const {
    return tree_ok && kinds_ok && chance_ok && infosets_ok &&
           payoff_lengths_ok;
  }
};

ValidationReport Validate(const GameSpec& spec);

// One (infoset id, action index) step of a player's own history.
struct ExperienceStep {
  std::string infoset;
  int action = 0;
  bool operator==(const ExperienceStep&) const = default;
};
using Experience = std::vector<ExperienceStep>;

// Immutable, validated game. Copies share the underlying data.
class Game {
 public:
  // Decision nodes without an infoset id receive a fresh singleton id.
  // Throws Error(kInvalid) naming the first violated invariant.
  static Game Build(GameSpec spec);

  const GameSpec& spec() const { return data_->spec; }
  int num_players() const { return static_cast<int>(spec().players.size()); }
  int num_nodes() const { return static_cast<int>(spec().nodes.size()); }
  NodeIndex root() const { return spec().root; }
  const Node& node(NodeIndex v) const { return spec().nodes[v]; }
  NodeKind kind(NodeIndex v) const { return data_->kind[v]; }
  bool is_decision(NodeIndex v) const {
    return data_->kind[v] == NodeKind::kDecision;
  }
  // Child node indices of v, in action order.
  std::span<const NodeIndex> children(NodeIndex v) const {
    return {data_->child_list.data() + data_->child_begin[v],
            data_->child_list.data() + data_->child_begin[v + 1]};
  }

  NodeIndex parent(NodeIndex v) const { return data_->parent[v]; }
  // Position of v among its parent's children; -1 for the root.
  int child_position(NodeIndex v) const { return data_->child_position[v]; }
  int depth(NodeIndex v) const { return data_->depth[v]; }
  int max_depth() const { return data_->max_depth; }
  // Root-first depth-first order (children left to right).
  const std::vector<NodeIndex>& preorder() const { return data_->preorder; }

  int num_infosets() const {
    return static_cast<int>(data_->infoset_names.size());
  }
  // Dense infoset index of a decision node; -1 otherwise.
  int infoset_of(NodeIndex v) const { return data_->infoset_of[v]; }
  const std::string& infoset_name(int infoset) const {
    return data_->infoset_names[infoset];
  }
  const std::vector<NodeIndex>& infoset_nodes(int infoset) const {
    return data_->infoset_nodes[infoset];
  }
  int infoset_player(int infoset) const {
    return node(infoset_nodes(infoset).front()).player;
  }
  int infoset_arity(int infoset) const {
    return static_cast<int>(
        node(infoset_nodes(infoset).front()).children.size());
  }
  int FindInfoset(std::string_view name) const;
  NodeIndex FindNode(std::int64_t id) const;

 private:
  struct Data {
    GameSpec spec;
    std::vector<NodeKind> kind;
    std::vector<int> child_begin;
    std::vector<NodeIndex> child_list;
    std::vector<NodeIndex> parent;
    std::vector<int> child_position;
    std::vector<int> depth;
    int max_depth = 0;
    std::vector<NodeIndex> preorder;
    std::vector<int> infoset_of;
    std::vector<std::string> infoset_names;
    std::vector<std::vector<NodeIndex>> infoset_nodes;
    std::map<std::string, int, std::less<>> infoset_lookup;
    std::map<std::int64_t, NodeIndex> node_lookup;
  };
  explicit Game(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

inline ValidationReport Validate(const Game& game) {
  return Validate(game.spec());
}

// Player p's own (infoset, action) steps strictly above v, root first.
Experience GetExperience(const Game& game, NodeIndex v, int player);

// Decision nodes of `player` on the root path of v, v included when it
// belongs to the player; root first.
std::vector<NodeIndex> OwnPath(const Game& game, NodeIndex v, int player);

}  // namespace timeable

#endif  // TIMEABLE_GAME_H_
