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

#include "timeable/randomized_timing.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace timeable {
namespace {

Outcome OwnTuple(const std::vector<NodeIndex>& own,
                 const DeterministicTiming& t) {
  Outcome out;
  out.reserve(own.size());
  for (NodeIndex u : own) out.push_back(t.times[u]);
  return out;
}

std::vector<NodeIndex> DecisionOwnPath(const Game& game, NodeIndex v) {
  return OwnPath(game, v, game.node(v).player);
}

}  // namespace

void CheckRandomizedTiming(const Game& game, const RandomizedTiming& rt) {
  if (rt.atoms.empty()) Fail(ErrorCode::kInvalid, "timing has no atoms");
  Rational total = 0;
  for (std::size_t a = 0; a < rt.atoms.size(); ++a) {
    if (rt.atoms[a].prob <= 0) {
      Fail(ErrorCode::kInvalid,
           "atom " + std::to_string(a) + " has non-positive probability");
    }
    total += rt.atoms[a].prob;
    const std::string issue = CheckTiming(game, rt.atoms[a].timing);
    if (!issue.empty()) {
      Fail(ErrorCode::kInvalid, "atom " + std::to_string(a) + ": " + issue);
    }
  }
  if (total != 1) {
    Fail(ErrorCode::kInvalid,
         "atom probabilities sum to " + FormatRational(total));
  }
}

RandomizedTiming Lift(const DeterministicTiming& t) {
  return RandomizedTiming{{TimingAtom{Rational(1), t}}};
}

Distribution TimingInformation(const Game& game, const RandomizedTiming& rt,
                               NodeIndex v, std::size_t budget) {
  Require(v >= 0 && v < game.num_nodes() && game.is_decision(v),
          "timing information: node is not a decision node");
  CheckBudget(rt.atoms.size(), budget, "timing information");
  const std::vector<NodeIndex> own = DecisionOwnPath(game, v);
  ProbabilityMap probs;
  for (const TimingAtom& atom : rt.atoms) {
    probs[OwnTuple(own, atom.timing)] += atom.prob;
  }
  return Distribution::FromMap(std::move(probs));
}

EpsilonReport VerifyEpsilonTiming(const Game& game, const RandomizedTiming& rt,
                                  std::size_t budget) {
  CheckBudget(rt.atoms.size(), budget,
              "exact verification (use Monte Carlo estimation)");
  CheckRandomizedTiming(game, rt);
  EpsilonReport report;
  for (int i = 0; i < game.num_infosets(); ++i) {
    const auto& nodes = game.infoset_nodes(i);
    if (nodes.size() < 2) continue;
    std::vector<Distribution> distinct;
    std::vector<NodeIndex> witness;
    for (NodeIndex v : nodes) {
      Distribution d = TimingInformation(game, rt, v, budget);
      if (std::find(distinct.begin(), distinct.end(), d) == distinct.end()) {
        distinct.push_back(std::move(d));
        witness.push_back(v);
      }
    }
    for (std::size_t a = 0; a < distinct.size(); ++a) {
      for (std::size_t b = a + 1; b < distinct.size(); ++b) {
        if (distinct[a].arity() != distinct[b].arity()) {
          Fail(ErrorCode::kArgument,
               "infoset \"" + game.infoset_name(i) +
                   "\" mixes histories with different own-node counts");
        }
        Rational tv = TvDistance(distinct[a], distinct[b]);
        if (tv > report.achieved) {
          report.achieved = tv;
          report.infoset = i;
          report.node_a = witness[a];
          report.node_b = witness[b];
        }
      }
    }
  }
  return report;
}

Rational LeakFreeProbability(const Game& game, const RandomizedTiming& rt,
                             std::size_t budget) {
  CheckBudget(rt.atoms.size(), budget, "leak-free probability");
  std::vector<char> leaks(rt.atoms.size(), 0);
  for (int i = 0; i < game.num_infosets(); ++i) {
    const auto& nodes = game.infoset_nodes(i);
    if (nodes.size() < 2) continue;
    std::vector<std::vector<NodeIndex>> own;
    std::vector<std::set<Outcome>> support;
    for (NodeIndex v : nodes) {
      own.push_back(DecisionOwnPath(game, v));
      std::set<Outcome> s;
      for (const TimingAtom& atom : rt.atoms) {
        s.insert(OwnTuple(own.back(), atom.timing));
      }
      support.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < rt.atoms.size(); ++a) {
      if (leaks[a]) continue;
      for (std::size_t k = 0; k < nodes.size() && !leaks[a]; ++k) {
        const Outcome x = OwnTuple(own[k], rt.atoms[a].timing);
        for (std::size_t l = 0; l < nodes.size(); ++l) {
          if (!support[l].count(x)) {
            leaks[a] = 1;
            break;
          }
        }
      }
    }
  }
  Rational p = 0;
  for (std::size_t a = 0; a < rt.atoms.size(); ++a) {
    if (!leaks[a]) p += rt.atoms[a].prob;
  }
  return p;
}

DeterministicTiming ExpectedTiming(const Game& game,
                                   const RandomizedTiming& rt) {
  DeterministicTiming out;
  out.times.assign(game.num_nodes(), Rational(0));
  for (const TimingAtom& atom : rt.atoms) {
    for (int v = 0; v < game.num_nodes(); ++v) {
      out.times[v] += atom.prob * atom.timing.times[v];
    }
  }
  return out;
}

RandomizedTiming ShiftedWindowTiming(const Game& game, int n) {
  Require(n >= 4, "window timing: N must be at least 4");
  const NodeIndex root = game.root();
  auto shape_error = [] {
    Fail(ErrorCode::kArgument,
         "window timing: game is not a chance root followed by at most two "
         "movers");
  };
  if (game.node(root).kind != NodeKind::kChance) shape_error();
  for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
    const Node& node = game.node(v);
    const int d = game.depth(v);
    if (d == 0 || node.kind == NodeKind::kLeaf) continue;
    if (node.kind != NodeKind::kDecision || d > 2) shape_error();
    if (d == 2 && game.node(game.parent(v)).player == node.player) {
      shape_error();
    }
  }
  RandomizedTiming rt;
  for (int i = 1; i <= n - 1; ++i) {
    DeterministicTiming t;
    t.times.assign(game.num_nodes(), Rational(0));
    for (NodeIndex v : game.preorder()) {
      if (v == root) continue;
      const NodeIndex p = game.parent(v);
      if (game.node(v).kind == NodeKind::kLeaf) {
        t.times[v] = t.times[p] + 1;
      } else {
        t.times[v] = game.depth(v) == 1 ? i : i + 1;
      }
    }
    rt.atoms.push_back({Rational(1, n - 1), std::move(t)});
  }
  return rt;
}

namespace {

class DiscreteAtomSampler : public TimingSampler {
 public:
  explicit DiscreteAtomSampler(const RandomizedTiming& rt) : rt_(rt) {
    std::vector<double> w;
    for (const TimingAtom& atom : rt.atoms) w.push_back(atom.prob.get_d());
    pick_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
  }
  void Sample(std::mt19937_64& rng,
              std::vector<Rational>& times) const override {
    times = rt_.atoms[pick_(rng)].timing.times;
  }

 private:
  RandomizedTiming rt_;
  mutable std::discrete_distribution<std::size_t> pick_;
};

}  // namespace

std::unique_ptr<TimingSampler> AtomSampler(const RandomizedTiming& rt) {
  Require(!rt.atoms.empty(), "sampler: timing has no atoms");
  return std::make_unique<DiscreteAtomSampler>(rt);
}

EstimateReport EstimateEpsilonTiming(const Game& game,
                                     const TimingSampler& sampler,
                                     std::uint64_t seed, std::size_t samples) {
  Require(samples >= 2, "estimate: need at least 2 samples");
  EstimateReport report;
  report.samples = samples;
  const std::size_t half = samples / 2;
  const std::size_t rest = samples - half;
  report.estimate = -1;
  std::vector<Rational> times;
  for (int i = 0; i < game.num_infosets(); ++i) {
    const auto& nodes = game.infoset_nodes(i);
    if (nodes.size() < 2) continue;
    // Per node: counts on the selection half and on the evaluation half.
    std::vector<std::map<Outcome, std::size_t>> first(nodes.size()),
        second(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(nodes[k])};
      std::mt19937_64 rng(seq);
      const std::vector<NodeIndex> own = DecisionOwnPath(game, nodes[k]);
      for (std::size_t s = 0; s < samples; ++s) {
        sampler.Sample(rng, times);
        Outcome x;
        for (NodeIndex u : own) x.push_back(times[u]);
        ++(s < half ? first[k] : second[k])[x];
      }
    }
    auto count = [](const std::map<Outcome, std::size_t>& m,
                    const Outcome& x) -> std::size_t {
      auto it = m.find(x);
      return it == m.end() ? 0 : it->second;
    };
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        if (a == b) continue;
        std::size_t in_a = 0, in_b = 0;
        for (const auto& [x, c] : second[a]) {
          if (count(first[a], x) > count(first[b], x)) in_a += c;
        }
        for (const auto& [x, c] : second[b]) {
          if (count(first[a], x) > count(first[b], x)) in_b += c;
        }
        const double pa = static_cast<double>(in_a) / rest;
        const double pb = static_cast<double>(in_b) / rest;
        const double est = pa - pb;
        if (est > report.estimate) {
          report.estimate = est;
          report.standard_error =
              std::sqrt((pa * (1 - pa) + pb * (1 - pb)) / rest);
          report.infoset = i;
          report.node_a = nodes[a];
          report.node_b = nodes[b];
        }
        if (a < b) {
          std::map<Outcome, long> diff;
          for (const auto& m : {first[a], second[a]}) {
            for (const auto& [x, c] : m) diff[x] += static_cast<long>(c);
          }
          for (const auto& m : {first[b], second[b]}) {
            for (const auto& [x, c] : m) diff[x] -= static_cast<long>(c);
          }
          long pos = 0;
          for (const auto& [x, c] : diff) pos += std::max(c, 0L);
          report.plug_in = std::max(report.plug_in,
                                    static_cast<double>(pos) / samples);
        }
      }
    }
  }
  if (report.estimate < 0) report.estimate = 0;
  return report;
}

}  // namespace timeable
