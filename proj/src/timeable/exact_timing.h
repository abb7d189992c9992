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

#ifndef TIMEABLE_EXACT_TIMING_H_
#define TIMEABLE_EXACT_TIMING_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timeable/game.h"
#include "timeable/rational.h"

namespace timeable {

// One vertex per information set and per chance node; leaves are omitted.
// Vertex ids follow first appearance in preorder, so the root is vertex 0.
// Edges are stored in compressed rows with sorted, distinct targets.
struct ContractedGraph {
  int num_vertices = 0;
  std::vector<int> vertex_of;          // per node; -1 for leaves
  std::vector<NodeIndex> representative;  // first node of each vertex
  std::vector<int> offsets;  // size num_vertices + 1
  std::vector<int> targets;

  int num_edges() const { return static_cast<int>(targets.size()); }
  std::pair<const int*, const int*> out(int v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  bool HasEdge(int from, int to) const;
  // Infoset name, or "chance@<id>" for a chance vertex.
  std::string Name(const Game& game, int v) const;
};

ContractedGraph ContractInfosets(const Game& game);

// First directed cycle met by a depth-first search that visits vertices and
// neighbours in increasing id order. A self-loop is a cycle of length 1.
std::optional<std::vector<int>> FindCycle(const ContractedGraph& graph);

// Node-indexed times.
struct DeterministicTiming {
  std::vector<Rational> times;
};

// Empty string when t is a timing of the game, else the first violation.
std::string CheckTiming(const Game& game, const DeterministicTiming& t);
bool IsExact(const Game& game, const DeterministicTiming& t);

std::optional<DeterministicTiming> ExactDeterministicTiming(const Game& game);

DeterministicTiming FloorTiming(const DeterministicTiming& t);

struct Point {
  Rational x;
  Rational y;
};

// Drawing in which each information set sits on its own horizontal line.
// Requires an exact, integer-valued timing.
std::vector<Point> Layout(const Game& game, const DeterministicTiming& t);

std::string LayoutDot(const Game& game, const DeterministicTiming& t);
std::string ContractionDot(const Game& game, const ContractedGraph& graph,
                           const std::vector<int>& highlight_cycle);

}  // namespace timeable

#endif  // TIMEABLE_EXACT_TIMING_H_
