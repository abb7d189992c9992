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

#include "timeable/game.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "timeable/errors.h"

namespace timeable {
namespace {

std::string NodeLabel(const GameSpec& spec, NodeIndex v) {
  return "node " + std::to_string(spec.nodes[v].id);
}

// Structural checks. Fills `preorder` when the tree part is sound.
void CheckStructure(const GameSpec& spec, ValidationReport& report,
                    std::vector<NodeIndex>& preorder) {
  const int n = static_cast<int>(spec.nodes.size());
  const int num_players = static_cast<int>(spec.players.size());
  auto issue = [&](bool& flag, const std::string& what) {
    flag = false;
    report.issues.push_back(what);
  };

  if (num_players < 1) issue(report.kinds_ok, "players: at least one player");
  if (n == 0 || spec.root < 0 || spec.root >= n) {
    issue(report.tree_ok, "tree: root index out of range");
    return;
  }

  std::set<std::int64_t> ids;
  for (int v = 0; v < n; ++v) {
    if (spec.nodes[v].id < 0 || !ids.insert(spec.nodes[v].id).second) {
      issue(report.tree_ok, "tree: duplicate or negative id at " +
                                NodeLabel(spec, v));
    }
  }

  std::vector<int> parents(n, 0);
  for (int v = 0; v < n; ++v) {
    const Node& node = spec.nodes[v];
    const std::string where = NodeLabel(spec, v);
    for (const Edge& e : node.children) {
      if (e.child < 0 || e.child >= n) {
        issue(report.tree_ok, "tree: " + where + " has a dangling child");
      } else {
        ++parents[e.child];
      }
    }
    switch (node.kind) {
      case NodeKind::kDecision:
        if (node.player < 1 || node.player > num_players) {
          issue(report.kinds_ok, "kind fields: decision " + where +
                                     " has no valid player");
        }
        if (node.children.empty()) {
          issue(report.kinds_ok,
                "kind fields: decision " + where + " has no children");
        }
        if (!node.payoffs.empty()) {
          issue(report.kinds_ok,
                "kind fields: decision " + where + " carries payoffs");
        }
        for (const Edge& e : node.children) {
          if (e.prob) {
            issue(report.kinds_ok, "kind fields: decision " + where +
                                       " has a probability on an edge");
            break;
          }
        }
        break;
      case NodeKind::kChance: {
        if (node.player != 0 || !node.infoset.empty()) {
          issue(report.kinds_ok, "kind fields: chance " + where +
                                     " carries a player or infoset");
        }
        if (node.children.empty()) {
          issue(report.kinds_ok,
                "kind fields: chance " + where + " has no children");
        }
        if (!node.payoffs.empty()) {
          issue(report.kinds_ok,
                "kind fields: chance " + where + " carries payoffs");
        }
        Rational sum = 0;
        bool complete = true;
        for (const Edge& e : node.children) {
          if (!e.prob) {
            complete = false;
            issue(report.chance_ok, "chance probabilities: " + where +
                                        " has an edge without probability");
            break;
          }
          if (*e.prob <= 0) {
            issue(report.chance_ok, "chance probabilities: " + where +
                                        " has a non-positive probability");
          }
          sum += *e.prob;
        }
        if (complete && !node.children.empty() && sum != 1) {
          issue(report.chance_ok, "chance probabilities: " + where +
                                      " probabilities sum to " +
                                      FormatRational(sum));
        }
        break;
      }
      case NodeKind::kLeaf:
        if (node.player != 0 || !node.infoset.empty()) {
          issue(report.kinds_ok, "kind fields: leaf " + where +
                                     " carries a player or infoset");
        }
        if (!node.children.empty()) {
          issue(report.kinds_ok,
                "kind fields: leaf " + where + " has children");
        }
        if (static_cast<int>(node.payoffs.size()) != num_players) {
          issue(report.payoff_lengths_ok,
                "payoffs: leaf " + where + " has " +
                    std::to_string(node.payoffs.size()) +
                    " payoffs for " + std::to_string(num_players) +
                    " players");
        }
        break;
    }
  }
  if (!report.tree_ok) return;

  for (int v = 0; v < n; ++v) {
    const int expected = v == spec.root ? 0 : 1;
    if (parents[v] != expected) {
      issue(report.tree_ok, "tree: " + NodeLabel(spec, v) + " has " +
                                std::to_string(parents[v]) + " parents");
    }
  }
  if (!report.tree_ok) return;

  preorder.clear();
  preorder.reserve(n);
  std::vector<NodeIndex> stack = {spec.root};
  std::vector<char> seen(n, 0);
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    preorder.push_back(v);
    const auto& ch = spec.nodes[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(it->child);
  }
  if (static_cast<int>(preorder.size()) != n) {
    issue(report.tree_ok, "tree: " + std::to_string(n - preorder.size()) +
                              " nodes unreachable from the root");
    return;
  }

  std::map<std::string, NodeIndex> first_of;
  for (int v = 0; v < n; ++v) {
    const Node& node = spec.nodes[v];
    if (node.kind != NodeKind::kDecision || node.infoset.empty()) continue;
    auto [it, inserted] = first_of.emplace(node.infoset, v);
    if (inserted) continue;
    const Node& other = spec.nodes[it->second];
    if (other.player != node.player) {
      issue(report.infosets_ok, "infosets: infoset \"" + node.infoset +
                                    "\" mixes players");
    }
    bool same_labels = other.children.size() == node.children.size();
    for (std::size_t a = 0; same_labels && a < node.children.size(); ++a) {
      same_labels = other.children[a].action == node.children[a].action;
    }
    if (!same_labels) {
      issue(report.infosets_ok, "infosets: infoset \"" + node.infoset +
                                    "\" has differing action labels");
    }
  }
}

}  // namespace

std::string_view KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kChance:
      return "chance";
    case NodeKind::kDecision:
      return "decision";
    case NodeKind::kLeaf:
      return "leaf";
  }
  return "?";
}

ValidationReport Validate(const GameSpec& spec) {
  ValidationReport report;
  std::vector<NodeIndex> preorder;
  CheckStructure(spec, report, preorder);
  if (!report.structurally_ok()) return report;

  const int n = static_cast<int>(spec.nodes.size());
  const int players = static_cast<int>(spec.players.size());

  // Experiences are hash-consed top-down: id 0 is the empty experience and
  // each (parent id, infoset, action) extension gets a fresh id.
  std::map<std::string, int> infoset_ids;
  auto infoset_key = [&](NodeIndex v) {
    const Node& node = spec.nodes[v];
    const std::string key =
        node.infoset.empty() ? "\x01" + std::to_string(v) : node.infoset;
    return infoset_ids.emplace(key, static_cast<int>(infoset_ids.size()))
        .first->second;
  };
  std::map<std::tuple<int, int, int>, int> extensions;
  std::vector<int> exp(static_cast<std::size_t>(n) * players, 0);
  std::vector<int> count(static_cast<std::size_t>(n) * players, 0);
  report.max_nodes_per_history.assign(players, 0);
  std::vector<NodeIndex> parent(n, kNoNode);
  std::vector<int> position(n, -1);
  for (NodeIndex v : preorder) {
    const Node& node = spec.nodes[v];
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      parent[node.children[a].child] = v;
      position[node.children[a].child] = static_cast<int>(a);
    }
    const NodeIndex u = parent[v];
    if (u != kNoNode) {
      const Node& up = spec.nodes[u];
      for (int p = 0; p < players; ++p) {
        exp[v * players + p] = exp[u * players + p];
        count[v * players + p] = count[u * players + p];
      }
      if (up.kind == NodeKind::kDecision) {
        const int p = up.player - 1;
        auto key = std::make_tuple(exp[u * players + p], infoset_key(u),
                                   position[v]);
        auto it = extensions.emplace(key, static_cast<int>(extensions.size()) + 1)
                      .first;
        exp[v * players + p] = it->second;
        ++count[v * players + p];
      }
    }
    if (node.kind == NodeKind::kDecision) {
      const int p = node.player - 1;
      report.max_nodes_per_history[p] =
          std::max(report.max_nodes_per_history[p], count[v * players + p] + 1);
    }
  }

  report.player_recall.assign(players, true);
  std::map<int, int> infoset_exp;
  for (int v = 0; v < n; ++v) {
    const Node& node = spec.nodes[v];
    if (node.kind != NodeKind::kDecision) continue;
    const int p = node.player - 1;
    auto [it, inserted] = infoset_exp.emplace(infoset_key(v), exp[v * players + p]);
    if (!inserted && it->second != exp[v * players + p]) {
      report.player_recall[p] = false;
    }
  }
  report.perfect_recall =
      std::all_of(report.player_recall.begin(), report.player_recall.end(),
                  [](bool b) { return b; });
  for (int p = 0; p < players; ++p) {
    if (!report.player_recall[p]) {
      report.issues.push_back("perfect recall: player " + std::to_string(p + 1) +
                              " forgets");
    }
  }

  report.payoffs_in_unit_interval = true;
  for (const Node& node : spec.nodes) {
    for (const Rational& u : node.payoffs) {
      if (u < 0 || u > 1) report.payoffs_in_unit_interval = false;
    }
  }
  return report;
}

Game Game::Build(GameSpec spec) {
  std::set<std::string> used;
  for (const Node& node : spec.nodes) {
    if (!node.infoset.empty()) used.insert(node.infoset);
  }
  for (Node& node : spec.nodes) {
    if (node.kind != NodeKind::kDecision || !node.infoset.empty()) continue;
    std::string name = "_n" + std::to_string(node.id);
    while (used.count(name)) name += "'";
    used.insert(name);
    node.infoset = std::move(name);
  }

  ValidationReport report;
  auto data = std::make_shared<Data>();
  CheckStructure(spec, report, data->preorder);
  if (!report.structurally_ok()) Fail(ErrorCode::kInvalid, report.issues.front());

  const int n = static_cast<int>(spec.nodes.size());
  data->parent.assign(n, kNoNode);
  data->child_position.assign(n, -1);
  data->depth.assign(n, 0);
  data->infoset_of.assign(n, -1);
  data->kind.reserve(n);
  data->child_begin.reserve(n + 1);
  data->child_begin.push_back(0);
  for (const Node& node : spec.nodes) {
    data->kind.push_back(node.kind);
    for (const Edge& e : node.children) data->child_list.push_back(e.child);
    data->child_begin.push_back(static_cast<int>(data->child_list.size()));
  }
  for (NodeIndex v : data->preorder) {
    const Node& node = spec.nodes[v];
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      const NodeIndex c = node.children[a].child;
      data->parent[c] = v;
      data->child_position[c] = static_cast<int>(a);
      data->depth[c] = data->depth[v] + 1;
      data->max_depth = std::max(data->max_depth, data->depth[c]);
    }
  }
  for (NodeIndex v = 0; v < n; ++v) {
    const Node& node = spec.nodes[v];
    data->node_lookup.emplace(node.id, v);
    if (node.kind != NodeKind::kDecision) continue;
    auto [it, inserted] = data->infoset_lookup.emplace(
        node.infoset, static_cast<int>(data->infoset_names.size()));
    if (inserted) {
      data->infoset_names.push_back(node.infoset);
      data->infoset_nodes.emplace_back();
    }
    data->infoset_of[v] = it->second;
    data->infoset_nodes[it->second].push_back(v);
  }
  for (Node& node : spec.nodes) {
    for (Edge& e : node.children) {
      if (e.prob) e.prob->canonicalize();
    }
    for (Rational& u : node.payoffs) u.canonicalize();
  }
  data->spec = std::move(spec);
  return Game(std::move(data));
}

int Game::FindInfoset(std::string_view name) const {
  auto it = data_->infoset_lookup.find(name);
  return it == data_->infoset_lookup.end() ? -1 : it->second;
}

NodeIndex Game::FindNode(std::int64_t id) const {
  auto it = data_->node_lookup.find(id);
  return it == data_->node_lookup.end() ? kNoNode : it->second;
}

Experience GetExperience(const Game& game, NodeIndex v, int player) {
  Require(v >= 0 && v < game.num_nodes(), "experience: unknown node");
  Experience out;
  for (NodeIndex c = v, u = game.parent(v); u != kNoNode;
       c = u, u = game.parent(u)) {
    const Node& node = game.node(u);
    if (node.kind == NodeKind::kDecision && node.player == player) {
      out.push_back({node.infoset, game.child_position(c)});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<NodeIndex> OwnPath(const Game& game, NodeIndex v, int player) {
  std::vector<NodeIndex> out;
  for (NodeIndex u = v; u != kNoNode; u = game.parent(u)) {
    const Node& node = game.node(u);
    if (node.kind == NodeKind::kDecision && node.player == player) {
      out.push_back(u);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace timeable
