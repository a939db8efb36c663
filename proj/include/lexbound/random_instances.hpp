// Copyright 2026 The lexbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random instances for property suites, selftest and bench. Every
// generator draws only from the Rng it is given, so one seed fixes a run.

#ifndef LEXBOUND_RANDOM_INSTANCES_HPP
#define LEXBOUND_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "lexbound/instances.hpp"

namespace lexbound::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  std::uint64_t next() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A seed from the system entropy source.
std::uint64_t fresh_seed();

Permutation permutation(Rng& rng, std::size_t n);
IntPoint point_in(Rng& rng, const IntBox& box);
/// [0, u] with u_i in [1, umax].
IntBox box(Rng& rng, std::size_t n, std::int64_t umax);
/// Entries in [-5, 5], or [0, 5] when nonnegative; now and then a half.
RationalVector objective(Rng& rng, std::size_t n, bool nonnegative);

/// General rows with mixed signs, satisfied by a random box point.
SetInstance linear(Rng& rng, std::size_t n, std::int64_t umax, std::size_t rows);
/// Sign-separated rows, satisfied by a random box point, on a tightened box.
SetInstance sign_separated(Rng& rng, std::size_t n, std::int64_t umax, std::size_t rows);
/// Positive weights; b at least 0.
SetInstance knapsack(Rng& rng, std::size_t n, std::int64_t umax);
/// Erdos-Renyi graph with edge probability p.
SetInstance graph(Rng& rng, std::size_t n, double p);
/// Nonnegative rows a x <= b over [0, u]; at least the origin is feasible.
SetInstance packing(Rng& rng, std::size_t n, std::int64_t umax);
/// Down-closed 0/1 set: knapsack, graph, packing rows or the down-closure of
/// random subsets, chosen at random.
SetInstance independence_system(Rng& rng, std::size_t n);
/// 0/1 set that is down-closed, up-closed or neither, chosen at random.
SetInstance binary_instance(Rng& rng, std::size_t n);
/// Down-closure of random points of [0, u] as a point list, or packing rows.
SetInstance down_integer(Rng& rng, std::size_t n, std::int64_t umax);
/// Nonempty random subset of a small box as a point list, tag unknown.
SetInstance point_cloud(Rng& rng, std::size_t n, std::int64_t umax);

/// g concave nondecreasing over sums of random weights in [0, wmax].
SubmodularOracle concave_submodular(Rng& rng, std::size_t n, std::int64_t wmax);
/// Sum of truncated cardinalities min(|S & B_k|, c_k): a truth table.
SubmodularOracle coverage_submodular(Rng& rng, std::size_t n);

LexConstraint lex_constraint(Rng& rng, const IntBox& box);

}  // namespace lexbound::gen

#endif  // LEXBOUND_RANDOM_INSTANCES_HPP
