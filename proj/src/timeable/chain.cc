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

#include "timeable/chain.h"

#include <algorithm>
#include <map>
#include <random>

namespace timeable {
namespace {

void CheckChainTuple(const Outcome& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!IsInteger(x[i]) || x[i] < 1 || (i > 0 && x[i] <= x[i - 1])) {
      Fail(ErrorCode::kInvalid,
           "chain distribution: outcome " + FormatTuple(x) +
               " is not a strictly increasing positive integer tuple");
    }
  }
}

std::size_t ToSize(const BigInt& v) {
  if (v > BigInt(static_cast<unsigned long>(-1))) {
    return static_cast<std::size_t>(-1);
  }
  return v.get_ui();
}

}  // namespace

ChainDistribution ChainDistribution::Create(Distribution offsets,
                                            BigInt spread) {
  if (spread < 1) Fail(ErrorCode::kInvalid, "chain distribution: spread < 1");
  if (offsets.arity() < 1) {
    Fail(ErrorCode::kInvalid, "chain distribution: arity must be at least 1");
  }
  for (const auto& [x, p] : offsets.support()) CheckChainTuple(x);
  return ChainDistribution(std::move(offsets), std::move(spread));
}

ChainDistribution ChainDistribution::FromDistribution(Distribution d) {
  return Create(std::move(d), BigInt(1));
}

BigInt ChainDistribution::SupportBound() const {
  return BigInt(static_cast<unsigned long>(offsets_.size())) * spread_;
}

BigInt ChainDistribution::MaxValue() const {
  BigInt best = 0;
  for (const auto& [x, p] : offsets_.support()) {
    best = std::max(best, Floor(x.back()));
  }
  return best + spread_ - 1;
}

Distribution ChainDistribution::Materialize(std::size_t budget) const {
  CheckBudget(ToSize(SupportBound()), budget, "chain materialization");
  if (spread_ == 1) return offsets_;
  const unsigned long b = spread_.get_ui();
  ProbabilityMap probs;
  const Rational share = Rational(1) / spread_;
  for (const auto& [x, p] : offsets_.support()) {
    for (unsigned long u = 0; u < b; ++u) {
      Outcome y = x;
      for (Rational& c : y) c += u;
      probs[std::move(y)] += p * share;
    }
  }
  return Distribution::FromMap(std::move(probs));
}

ChainDistribution IndistBase(int n, int k) {
  Require(1 <= k && k < n, "indist_base: need 1 <= k < N");
  return ChainDistribution::Create(
      Distribution::PointMass({Rational(1), Rational(1 + k)}),
      BigInt(n - k));
}

ChainDistribution IndistRecursive(const ChainDistribution& inner,
                                  const BigInt& b, std::size_t budget) {
  Require(b >= 1, "indist_recursive: B must be at least 1");
  Require(inner.arity() >= 2, "indist_recursive: inner arity must be >= 2");
  const Distribution x_law = inner.Materialize(budget);
  ProbabilityMap offsets;
  BigInt enumerated = 0;
  for (const auto& [x, p] : x_law.support()) {
    BigInt exponent = 0;
    for (const Rational& xi : x) exponent += Floor(xi);
    if (exponent > BigInt(64)) {
      Fail(ErrorCode::kBudget,
           "indist_recursive: gap space 2^" + exponent.get_str() +
               " exceeds budget " + std::to_string(budget));
    }
    enumerated += Pow2(exponent.get_ui());
    CheckBudget(ToSize(enumerated), budget, "indist_recursive");
    const Rational weight = p / Rational(Pow2(exponent.get_ui()));
    std::vector<unsigned long> limit;
    for (const Rational& xi : x) limit.push_back(1UL << Floor(xi).get_ui());
    std::vector<unsigned long> gap(x.size(), 1);
    while (true) {
      Outcome w;
      w.reserve(x.size() + 1);
      BigInt pos = 1;
      w.emplace_back(pos);
      for (unsigned long g : gap) {
        pos += g;
        w.emplace_back(pos);
      }
      offsets[std::move(w)] += weight;
      std::size_t i = 0;
      while (i < gap.size() && gap[i] == limit[i]) gap[i++] = 1;
      if (i == gap.size()) break;
      ++gap[i];
    }
  }
  return ChainDistribution::Create(Distribution::FromMap(std::move(offsets)),
                                   b);
}

namespace {

// Per shape (differences to the first selected coordinate), the weights
// of each first-coordinate offset.
using ShapeTable = std::map<Outcome, std::map<Rational, Rational>>;

ShapeTable Shapes(const ChainDistribution& cd, const std::vector<int>& s) {
  ShapeTable table;
  for (const auto& [w, p] : cd.offsets().support()) {
    const Rational& a = w[s.front()];
    Outcome shape;
    shape.reserve(s.size() - 1);
    for (std::size_t k = 1; k < s.size(); ++k) shape.push_back(w[s[k]] - a);
    table[std::move(shape)][a] += p;
  }
  return table;
}

// Sum over integers y of max(f(y) - g(y), 0), where f and g are sums of
// weighted boxes [a, a + spread); the caller divides by the spread.
Rational BoxExcess(const std::map<Rational, Rational>* f,
                   const std::map<Rational, Rational>* g,
                   const BigInt& spread) {
  std::map<Rational, Rational> events;
  if (f) {
    for (const auto& [a, p] : *f) {
      events[a] += p;
      events[a + spread] -= p;
    }
  }
  if (g) {
    for (const auto& [a, p] : *g) {
      events[a] -= p;
      events[a + spread] += p;
    }
  }
  Rational total = 0, level = 0;
  const Rational* prev = nullptr;
  for (const auto& [x, delta] : events) {
    if (prev && level > 0) total += level * (x - *prev);
    level += delta;
    prev = &x;
  }
  return total;
}

Rational ShapeTv(const ShapeTable& s, const ShapeTable& t,
                 const BigInt& spread) {
  Rational total = 0;
  for (const auto& [shape, boxes] : s) {
    auto it = t.find(shape);
    total += BoxExcess(&boxes, it == t.end() ? nullptr : &it->second, spread);
  }
  return total / Rational(spread);
}

void CheckSubset(const ChainDistribution& cd, const std::vector<int>& s) {
  Require(!s.empty(), "subset distance: empty index set");
  for (std::size_t k = 0; k < s.size(); ++k) {
    Require(s[k] >= 0 && s[k] < cd.arity() && (k == 0 || s[k] > s[k - 1]),
            "subset distance: indices must be increasing and in range");
  }
}

}  // namespace

Rational SubsetTv(const ChainDistribution& cd, const std::vector<int>& s,
                  const std::vector<int>& t) {
  CheckSubset(cd, s);
  CheckSubset(cd, t);
  Require(s.size() == t.size(), "subset distance: sizes differ");
  return ShapeTv(Shapes(cd, s), Shapes(cd, t), cd.spread());
}

SubsetReport VerifyIndistinguishableSubsets(const ChainDistribution& cd,
                                            int m) {
  Require(1 <= m && m < cd.arity(), "subset check: need 1 <= m < arity");
  std::vector<std::vector<int>> subsets;
  std::vector<int> mask(cd.arity(), 0);
  std::fill(mask.end() - m, mask.end(), 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < cd.arity(); ++i) {
      if (mask[i]) s.push_back(i);
    }
    subsets.push_back(std::move(s));
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(subsets.begin(), subsets.end());

  std::vector<ShapeTable> tables;
  for (const auto& s : subsets) tables.push_back(Shapes(cd, s));
  SubsetReport report;
  report.subset_a = report.subset_b = subsets.front();
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      Rational tv = ShapeTv(tables[a], tables[b], cd.spread());
      if (tv > report.achieved) {
        report.achieved = tv;
        report.subset_a = subsets[a];
        report.subset_b = subsets[b];
      }
    }
  }
  return report;
}

namespace {

void RequireDepth(const Game& game, const ChainDistribution& cd) {
  if (game.max_depth() > cd.arity()) {
    Fail(ErrorCode::kArgument,
         "timing from chain: arity " + std::to_string(cd.arity()) +
             " is below the game depth " + std::to_string(game.max_depth()));
  }
}

}  // namespace

RandomizedTiming TimingFromChain(const Game& game,
                                 const ChainDistribution& cd,
                                 std::size_t budget) {
  RequireDepth(game, cd);
  const Distribution law = cd.Materialize(budget);
  RandomizedTiming rt;
  rt.atoms.reserve(law.size());
  for (const auto& [x, p] : law.support()) {
    DeterministicTiming t;
    t.times.resize(game.num_nodes());
    for (NodeIndex v = 0; v < game.num_nodes(); ++v) {
      const int d = game.depth(v);
      t.times[v] = d == 0 ? Rational(0) : x[d - 1];
    }
    rt.atoms.push_back({p, std::move(t)});
  }
  return rt;
}

namespace {

class ChainTimingSampler : public TimingSampler {
 public:
  ChainTimingSampler(const Game& game, const ChainDistribution& cd)
      : depth_(game.num_nodes()) {
    for (NodeIndex v = 0; v < game.num_nodes(); ++v) depth_[v] = game.depth(v);
    std::vector<double> w;
    for (const auto& [x, p] : cd.offsets().support()) {
      offsets_.push_back(x);
      w.push_back(p.get_d());
    }
    pick_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
    Require(cd.spread() <= BigInt(static_cast<unsigned long>(-1) >> 1),
            "chain sampler: spread too large");
    shift_ = std::uniform_int_distribution<unsigned long>(
        0, cd.spread().get_ui() - 1);
  }

  void Sample(std::mt19937_64& rng,
              std::vector<Rational>& times) const override {
    const Outcome& w = offsets_[pick_(rng)];
    const unsigned long u = shift_(rng);
    times.resize(depth_.size());
    for (std::size_t v = 0; v < depth_.size(); ++v) {
      times[v] = depth_[v] == 0 ? Rational(0) : w[depth_[v] - 1] + u;
    }
  }

 private:
  std::vector<int> depth_;
  std::vector<Outcome> offsets_;
  mutable std::discrete_distribution<std::size_t> pick_;
  mutable std::uniform_int_distribution<unsigned long> shift_;
};

}  // namespace

std::unique_ptr<TimingSampler> ChainSampler(const Game& game,
                                            const ChainDistribution& cd) {
  RequireDepth(game, cd);
  return std::make_unique<ChainTimingSampler>(game, cd);
}

}  // namespace timeable
