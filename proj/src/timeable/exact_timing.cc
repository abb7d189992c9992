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

#include "timeable/exact_timing.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

#include "timeable/errors.h"

namespace timeable {

bool ContractedGraph::HasEdge(int from, int to) const {
  auto [b, e] = out(from);
  return std::binary_search(b, e, to);
}

std::string ContractedGraph::Name(const Game& game, int v) const {
  const Node& node = game.node(representative[v]);
  return node.kind == NodeKind::kDecision ? node.infoset
                                          : "chance@" + std::to_string(node.id);
}

ContractedGraph ContractInfosets(const Game& game) {
  const int n = game.num_nodes();
  ContractedGraph g;
  g.vertex_of.assign(n, -1);
  g.representative.reserve(n);
  std::vector<int> infoset_vertex(game.num_infosets(), -1);
  for (NodeIndex v : game.preorder()) {
    const NodeKind kind = game.kind(v);
    if (kind == NodeKind::kLeaf) continue;
    int& slot = kind == NodeKind::kDecision ? infoset_vertex[game.infoset_of(v)]
                                            : g.vertex_of[v];
    if (slot < 0) {
      slot = g.num_vertices++;
      g.representative.push_back(v);
    }
    g.vertex_of[v] = slot;
  }

  // Edge list sorted by (source, target) with two counting-sort passes.
  std::vector<int> src, dst;
  src.reserve(n);
  dst.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    if (g.vertex_of[v] < 0) continue;
    for (NodeIndex c : game.children(v)) {
      if (g.vertex_of[c] < 0) continue;
      src.push_back(g.vertex_of[v]);
      dst.push_back(g.vertex_of[c]);
    }
  }
  const int m = static_cast<int>(src.size());
  const int nv = g.num_vertices;
  auto counting_pass = [&](const std::vector<int>& key,
                           const std::vector<int>& order) {
    std::vector<int> count(nv + 1, 0);
    for (int i : order) ++count[key[i] + 1];
    for (int k = 0; k < nv; ++k) count[k + 1] += count[k];
    std::vector<int> out(m);
    for (int i : order) out[count[key[i]]++] = i;
    return out;
  };
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  order = counting_pass(dst, order);
  order = counting_pass(src, order);

  g.offsets.assign(nv + 1, 0);
  g.targets.reserve(m);
  int prev_s = -1, prev_t = -1;
  for (int i : order) {
    if (src[i] == prev_s && dst[i] == prev_t) continue;
    prev_s = src[i];
    prev_t = dst[i];
    g.targets.push_back(dst[i]);
    ++g.offsets[src[i] + 1];
  }
  for (int k = 0; k < nv; ++k) g.offsets[k + 1] += g.offsets[k];
  return g;
}

std::optional<std::vector<int>> FindCycle(const ContractedGraph& graph) {
  const int nv = graph.num_vertices;
  std::vector<char> color(nv, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, int>> stack;  // (vertex, next edge offset)
  for (int s = 0; s < nv; ++s) {
    if (color[s]) continue;
    color[s] = 1;
    stack.emplace_back(s, graph.offsets[s]);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == graph.offsets[v + 1]) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const int w = graph.targets[next++];
      if (color[w] == 1) {
        std::vector<int> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) cycle.push_back(it->first);
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        stack.emplace_back(w, graph.offsets[w]);
      }
    }
  }
  return std::nullopt;
}

std::string CheckTiming(const Game& game, const DeterministicTiming& t) {
  if (static_cast<int>(t.times.size()) != game.num_nodes()) {
    return "timing covers " + std::to_string(t.times.size()) + " of " +
           std::to_string(game.num_nodes()) + " nodes";
  }
  if (t.times[game.root()] < 0) return "root time is negative";
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    for (const Edge& e : game.node(v).children) {
      if (t.times[e.child] < t.times[v] + 1) {
        return "node " + std::to_string(game.node(e.child).id) +
               " is less than 1 after its parent " +
               std::to_string(game.node(v).id);
      }
    }
  }
  return "";
}

bool IsExact(const Game& game, const DeterministicTiming& t) {
  for (int i = 0; i < game.num_infosets(); ++i) {
    const auto& nodes = game.infoset_nodes(i);
    for (NodeIndex v : nodes) {
      if (t.times[v] != t.times[nodes.front()]) return false;
    }
  }
  return true;
}

std::optional<DeterministicTiming> ExactDeterministicTiming(const Game& game) {
  const ContractedGraph g = ContractInfosets(game);
  const int nv = g.num_vertices;
  std::vector<int> indegree(nv, 0);
  for (int w : g.targets) ++indegree[w];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < nv; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> rank(nv, -1);
  int next_rank = 0;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    rank[v] = next_rank++;
    auto [b, e] = g.out(v);
    for (const int* w = b; w != e; ++w) {
      if (--indegree[*w] == 0) ready.push(*w);
    }
  }
  if (next_rank < nv) return std::nullopt;

  DeterministicTiming t;
  t.times.assign(game.num_nodes(), Rational(0));
  for (NodeIndex v : game.preorder()) {
    if (g.vertex_of[v] >= 0) {
      t.times[v] = rank[g.vertex_of[v]];
    } else {
      t.times[v] = t.times[game.parent(v)] + 1;
    }
  }
  return t;
}

DeterministicTiming FloorTiming(const DeterministicTiming& t) {
  DeterministicTiming out;
  out.times.reserve(t.times.size());
  for (const Rational& q : t.times) out.times.emplace_back(Floor(q));
  return out;
}

std::vector<Point> Layout(const Game& game, const DeterministicTiming& t) {
  if (!CheckTiming(game, t).empty() || !IsExact(game, t)) {
    Fail(ErrorCode::kArgument, "layout: timing is not an exact timing");
  }
  for (const Rational& q : t.times) {
    if (!IsInteger(q)) {
      Fail(ErrorCode::kArgument, "layout: timing is not integer-valued");
    }
  }
  const ContractedGraph g = ContractInfosets(game);
  const Rational q = std::max(g.num_vertices, 1);
  std::vector<Point> points(game.num_nodes());
  const auto& pre = game.preorder();
  int next_leaf = 0;
  for (NodeIndex v : pre) {
    if (game.node(v).kind == NodeKind::kLeaf) points[v].x = next_leaf++;
  }
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Node& node = game.node(*it);
    if (!node.children.empty()) {
      points[*it].x = (points[node.children.front().child].x +
                       points[node.children.back().child].x) /
                      2;
    }
    const int ordinal = g.vertex_of[*it] + 1;  // 0 for leaves
    points[*it].y = -(t.times[*it] - Rational(ordinal) / q);
  }
  return points;
}

namespace {

std::string DotLabel(const Game& game, NodeIndex v) {
  const Node& node = game.node(v);
  std::string label = std::to_string(node.id);
  if (node.kind == NodeKind::kDecision) {
    label += " P" + std::to_string(node.player) + " " + node.infoset;
  } else if (node.kind == NodeKind::kChance) {
    label += " chance";
  }
  return label;
}

}  // namespace

std::string LayoutDot(const Game& game, const DeterministicTiming& t) {
  const std::vector<Point> points = Layout(game, t);
  std::ostringstream out;
  out << "digraph timing {\n  node [shape=box];\n";
  std::map<Rational, std::vector<NodeIndex>> ranks;
  for (NodeIndex v : game.preorder()) {
    ranks[points[v].y].push_back(v);
    out << "  n" << game.node(v).id << " [label=\"" << DotLabel(game, v)
        << "\\nt=" << FormatRational(t.times[v])
        << "\", y=\"" << FormatRational(points[v].y) << "\", x=\""
        << FormatRational(points[v].x) << "\"];\n";
  }
  for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
    out << "  { rank=same;";
    for (NodeIndex v : it->second) out << " n" << game.node(v).id << ";";
    out << " }\n";
  }
  for (NodeIndex v : game.preorder()) {
    for (const Edge& e : game.node(v).children) {
      out << "  n" << game.node(v).id << " -> n" << game.node(e.child).id
          << " [label=\"" << e.action << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string ContractionDot(const Game& game, const ContractedGraph& graph,
                           const std::vector<int>& highlight_cycle) {
  std::vector<std::pair<int, int>> red;
  for (std::size_t i = 0; i < highlight_cycle.size(); ++i) {
    red.emplace_back(highlight_cycle[i],
                     highlight_cycle[(i + 1) % highlight_cycle.size()]);
  }
  std::ostringstream out;
  out << "digraph contraction {\n";
  for (int v = 0; v < graph.num_vertices; ++v) {
    out << "  v" << v << " [label=\"" << graph.Name(game, v) << "\"];\n";
  }
  for (int v = 0; v < graph.num_vertices; ++v) {
    auto [b, e] = graph.out(v);
    for (const int* w = b; w != e; ++w) {
      const bool hot = std::find(red.begin(), red.end(),
                                 std::make_pair(v, *w)) != red.end();
      out << "  v" << v << " -> v" << *w << (hot ? " [color=red]" : "")
          << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace timeable
