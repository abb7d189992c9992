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

#include "timeable/families.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "timeable/errors.h"

namespace timeable {
namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(std::vector<std::string> players) {
    spec_.players = std::move(players);
  }
  NodeIndex Chance() { return Add(NodeKind::kChance, 0, ""); }
  NodeIndex Decision(int player, std::string infoset) {
    return Add(NodeKind::kDecision, player, std::move(infoset));
  }
  NodeIndex Leaf(std::vector<Rational> payoffs) {
    const NodeIndex v = Add(NodeKind::kLeaf, 0, "");
    spec_.nodes[v].payoffs = std::move(payoffs);
    return v;
  }
  void Link(NodeIndex parent, NodeIndex child, std::string action,
            std::optional<Rational> prob = std::nullopt) {
    spec_.nodes[parent].children.push_back(
        Edge{child, std::move(action), std::move(prob)});
  }
  Game Build(NodeIndex root) {
    spec_.root = root;
    return Game::Build(std::move(spec_));
  }

 private:
  NodeIndex Add(NodeKind kind, int player, std::string infoset) {
    Node node;
    node.id = static_cast<std::int64_t>(spec_.nodes.size());
    node.kind = kind;
    node.player = player;
    node.infoset = std::move(infoset);
    spec_.nodes.push_back(std::move(node));
    return static_cast<NodeIndex>(spec_.nodes.size() - 1);
  }
  GameSpec spec_;
};

std::vector<Rational> Pay(int a, int b) { return {Rational(a), Rational(b)}; }

}  // namespace

Game Figure1(char variant) {
  Require(variant == 'a' || variant == 'b' || variant == 'c',
          "figure 1 variant must be a, b or c");
  TreeBuilder t({"1", "2"});
  const Rational half(1, 2);
  const NodeIndex root = t.Chance();
  const std::string p1 = "P1-set", p2 = "P2-set";

  // Heads: player 1 guesses first.
  const NodeIndex left = t.Decision(1, p1);
  t.Link(root, left, "heads", half);
  const NodeIndex ll = t.Decision(2, p2);
  t.Link(left, ll, "first");
  t.Link(ll, t.Leaf(Pay(1, 0)), "first");
  t.Link(ll, t.Leaf(Pay(1, 1)), "second");
  if (variant == 'c') {
    t.Link(left, t.Leaf(Pay(0, 0)), "second");
  } else {
    const NodeIndex lr = t.Decision(2, p2);
    t.Link(left, lr, "second");
    t.Link(lr, t.Leaf(Pay(0, 0)), "first");
    t.Link(lr, t.Leaf(Pay(0, 1)), "second");
  }

  // Tails: player 2 guesses first.
  const NodeIndex right = t.Decision(2, p2);
  t.Link(root, right, "tails", half);
  if (variant == 'b') {
    t.Link(right, t.Leaf(Pay(0, 1)), "first");
    t.Link(right, t.Leaf(Pay(0, 0)), "second");
  } else {
    const NodeIndex rl = t.Decision(1, p1);
    t.Link(right, rl, "first");
    t.Link(rl, t.Leaf(Pay(0, 1)), "first");
    t.Link(rl, t.Leaf(Pay(1, 1)), "second");
    if (variant == 'c') {
      t.Link(right, t.Leaf(Pay(0, 0)), "second");
    } else {
      const NodeIndex rr = t.Decision(1, p1);
      t.Link(right, rr, "second");
      t.Link(rr, t.Leaf(Pay(0, 0)), "first");
      t.Link(rr, t.Leaf(Pay(1, 0)), "second");
    }
  }
  return t.Build(root);
}

void CheckChoiceless(const SymmetricChoicelessGame& scg) {
  Require(scg.n >= 1, "choiceless game: need at least one player");
  Require(!scg.seq.empty(), "choiceless game: empty sequence");
  for (int p : scg.seq) {
    Require(p >= 1 && p <= scg.n, "choiceless game: player out of range");
  }
}

std::vector<std::vector<int>> Permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::size_t FactorialCapped(int n, std::size_t cap) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

}  // namespace

Game ExpandChoiceless(const SymmetricChoicelessGame& scg, std::size_t limit) {
  CheckChoiceless(scg);
  const std::size_t count = FactorialCapped(scg.n, limit);
  if (count > limit) {
    Fail(ErrorCode::kBudget, "expand_choiceless: " + std::to_string(scg.n) +
                                 "! numberings exceed the limit " +
                                 std::to_string(limit));
  }
  std::vector<std::string> players;
  for (int p = 1; p <= scg.n; ++p) players.push_back(std::to_string(p));
  TreeBuilder t(players);
  const NodeIndex root = t.Chance();
  const Rational share = Rational(1) / Rational(static_cast<unsigned long>(count));
  for (const std::vector<int>& sigma : Permutations(scg.n)) {
    std::vector<int> owner(scg.n + 1);  // number -> player
    std::string label = "sigma=";
    for (int p = 1; p <= scg.n; ++p) {
      owner[sigma[p - 1]] = p;
      label += (p > 1 ? "," : "") + std::to_string(sigma[p - 1]);
    }
    std::vector<int> seen(scg.n + 1, 0);
    NodeIndex prev = root;
    for (std::size_t i = 0; i < scg.seq.size(); ++i) {
      const int p = owner[scg.seq[i]];
      const NodeIndex v = t.Decision(
          p, "p" + std::to_string(p) + "#" + std::to_string(seen[p]++));
      if (prev == root) {
        t.Link(root, v, label, share);
      } else {
        t.Link(prev, v, "next");
      }
      prev = v;
    }
    t.Link(prev, t.Leaf(std::vector<Rational>(scg.n, Rational(0))), "next");
  }
  return t.Build(root);
}

int Agenda::Count(int player) const {
  return static_cast<int>(std::count(seq.begin(), seq.end(), player));
}

std::string Agenda::ToString() const {
  const bool compact =
      std::all_of(names.begin(), names.end(),
                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += seq[i] == kSeparator ? "|" : names[seq[i] - 1];
  }
  return out;
}

void CheckAgenda(const Agenda& agenda) {
  Require(agenda.n >= 0, "agenda: negative player count");
  Require(static_cast<int>(agenda.names.size()) == agenda.n,
          "agenda: one name per player required");
  for (int p : agenda.seq) {
    Require(p >= 0 && p <= agenda.n, "agenda: symbol out of range");
  }
}

Agenda MakeAgenda(int n, std::vector<int> seq) {
  Agenda a;
  a.n = n;
  a.seq = std::move(seq);
  for (int p = 1; p <= n; ++p) a.names.push_back(std::to_string(p));
  CheckAgenda(a);
  return a;
}

namespace {

std::string FreshName(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  if (index < 52) return std::string(1, static_cast<char>('A' + index - 26));
  return "{" + std::to_string(index) + "}";
}

bool IsNumeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

// Numeric names keep their value; the rest are numbered after them by first
// appearance.
Agenda Number(const std::vector<std::string>& tokens) {
  Agenda a;
  std::map<std::string, int> id;
  int numeric = 0;
  for (const std::string& s : tokens) {
    if (s != "|" && IsNumeric(s)) {
      numeric = std::max(numeric, std::stoi(s));
      id[s] = std::stoi(s);
    }
  }
  a.n = numeric;
  a.names.resize(numeric);
  for (auto& [name, value] : id) a.names[value - 1] = name;
  for (const std::string& s : tokens) {
    if (s == "|") {
      a.seq.push_back(kSeparator);
      continue;
    }
    auto [it, inserted] = id.emplace(s, a.n + 1);
    if (inserted) {
      ++a.n;
      a.names.push_back(s);
    }
    a.seq.push_back(it->second);
  }
  return a;
}

}  // namespace

Agenda AgendaAr(int r) {
  Require(r >= 1, "agenda_Ar: r must be at least 1");
  std::vector<std::string> tokens = {"2", "|", "3", "3", "3", "2", "|",
                                     "1", "1", "1", "|", "2"};
  Agenda current = Number(tokens);
  for (int level = 2; level <= r; ++level) {
    // Segments of the wrapped agenda ||A||, with every old player added to
    // the second and the second-to-last segment.
    std::vector<std::vector<std::string>> segments(2);
    segments.emplace_back();
    for (int s : current.seq) {
      if (s == kSeparator) {
        segments.emplace_back();
      } else {
        segments.back().push_back(current.names[s - 1]);
      }
    }
    segments.emplace_back();
    segments.emplace_back();
    std::vector<std::string> old_players;
    for (int p = 1; p <= current.n; ++p) old_players.push_back(current.names[p - 1]);
    segments[1] = old_players;
    segments[segments.size() - 2] = old_players;

    // Fresh players are woven around each window of four separators.
    const int num_seps = static_cast<int>(segments.size()) - 1;
    const int first_fresh = 16 * (level - 2);
    static const char* const kPattern[5] = {"bd", "cc", "adda", "bb", "ac"};
    std::vector<std::vector<std::string>> fresh(segments.size());
    for (int s = 1; s + 3 <= num_seps; ++s) {
      const int group = (s - 1) % 4;
      for (int k = 0; k < 5; ++k) {
        for (const char* c = kPattern[k]; *c; ++c) {
          fresh[s - 1 + k].push_back(
              FreshName(first_fresh + 4 * group + (*c - 'a')));
        }
      }
    }
    tokens.clear();
    for (std::size_t k = 0; k < segments.size(); ++k) {
      if (k > 0) tokens.push_back("|");
      tokens.insert(tokens.end(), fresh[k].begin(), fresh[k].end());
      tokens.insert(tokens.end(), segments[k].begin(), segments[k].end());
    }
    current = Number(tokens);
  }
  return current;
}

SymmetricChoicelessGame StripSeparators(const Agenda& agenda) {
  CheckAgenda(agenda);
  std::vector<int> remap(agenda.n + 1, 0);
  for (int s : agenda.seq) {
    if (s != kSeparator) remap[s] = 1;
  }
  int next = 0;
  for (int p = 1; p <= agenda.n; ++p) {
    if (remap[p]) remap[p] = ++next;
  }
  SymmetricChoicelessGame out;
  out.n = next;
  for (int s : agenda.seq) {
    if (s != kSeparator) out.seq.push_back(remap[s]);
  }
  return out;
}

SymmetricChoicelessGame GammaR(int r) {
  Require(r >= 1, "gamma_r: r must be at least 1");
  return StripSeparators(AgendaAr(r + 1));
}

Agenda PerceptionGame(int c) {
  Require(c >= 1 && c <= 20, "perception_game: c must be in 1..20");
  const int n = 4 * c * c * c * c + 1;
  std::vector<int> seq;
  for (int p = 1; p <= n; ++p) seq.push_back(p);
  seq.push_back(kSeparator);
  for (int p = n + 1; p <= 2 * n; ++p) seq.insert(seq.end(), {p, p});
  seq.push_back(kSeparator);
  seq.push_back(kSeparator);
  for (int p = 1; p <= n; ++p) seq.insert(seq.end(), {p, p});
  seq.push_back(kSeparator);
  for (int p = n + 1; p <= 2 * n; ++p) seq.push_back(p);
  return MakeAgenda(2 * n, std::move(seq));
}

}  // namespace timeable
