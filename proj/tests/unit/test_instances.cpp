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

#include <doctest.h>

#include <cstdlib>

#include "lexbound/errors.hpp"
#include "lexbound/instances.hpp"
#include "lexbound/random_instances.hpp"
#include "support/oracles.hpp"

using namespace lexbound;

namespace {

SetInstance knapsack_example() {
  return SetInstance(IntBox::from_upper({1, 5, 4, 1, 2}), Knapsack{{2, 8, 40, 150, 310}, 825},
                     Monotonicity::down);
}

RationalVector q(std::initializer_list<long> v) {
  RationalVector out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

IntBox random_sub_box(gen::Rng& rng, const IntBox& box) {
  IntPoint lo(box.dim()), hi(box.dim());
  for (std::size_t j = 0; j < box.dim(); ++j) {
    auto a = rng.uniform(box.lower(j), box.upper(j));
    auto b = rng.uniform(box.lower(j), box.upper(j));
    lo[j] = std::min(a, b);
    hi[j] = std::max(a, b);
  }
  return IntBox(lo, hi);
}

SetInstance random_instance(gen::Rng& rng) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
  switch (rng.uniform(0, 5)) {
    case 0: return gen::linear(rng, n, 3, static_cast<std::size_t>(rng.uniform(1, 3)));
    case 1: return gen::sign_separated(rng, n, 4, 2);
    case 2: return gen::knapsack(rng, n, 3);
    case 3: return gen::down_integer(rng, n, 3);
    case 4: return gen::point_cloud(rng, n, 2);
    default: return gen::binary_instance(rng, std::max<std::size_t>(n, 2));
  }
}

}  // namespace

TEST_CASE("is_int_feasible examples") {
  const auto k = knapsack_example();
  CHECK_THROWS_AS(is_int_feasible(k, IntBox({0, 0, 0, 0, 3}, {1, 5, 4, 1, 3})), DimensionError);
  CHECK(is_int_feasible(k, IntBox({0, 0, 0, 0, 2}, {1, 5, 4, 1, 2})));
  const SetInstance g(IntBox::binary(2), IndependenceGraph{{{0, 1}}});
  CHECK_FALSE(is_int_feasible(g, IntBox({1, 1}, {1, 1})));
  const SetInstance pl(IntBox::from_upper({2, 2}), PointList{{{1, 2}}});
  CHECK(is_int_feasible(pl, pl.box()));
}

TEST_CASE("contains examples") {
  CHECK(contains(knapsack_example(), {1, 1, 1, 1, 2}));
  const SetInstance v(IntBox::binary(2), VPolytope{{q({1, 0}), q({0, 1})}});
  CHECK_FALSE(contains(v, {0, 0}));
  CHECK(contains(v, {1, 0}));
}

TEST_CASE("is_int_feasible agrees with enumeration on random sub-boxes") {
  gen::Rng rng(101);
  for (int t = 0; t < 250; ++t) {
    const auto inst = random_instance(rng);
    const auto feasible = testing::feasible_points(inst);
    for (int s = 0; s < 4; ++s) {
      const IntBox sub = random_sub_box(rng, inst.box());
      const bool expected = std::any_of(feasible.begin(), feasible.end(),
                                        [&](const IntPoint& x) { return sub.contains(x); });
      if (is_int_feasible(inst, sub) != expected) {
        FAIL("instance " << t << " (" << inst.body_type() << ")");
      }
    }
    for (const auto& x : testing::all_box_points(inst.box())) {
      REQUIRE(contains(inst, x) == testing::member(inst, x));
    }
  }
}

TEST_CASE("monotone fast path agrees with the general path") {
  gen::Rng rng(102);
  for (int t = 0; t < 100; ++t) {
    const auto down = gen::down_integer(rng, static_cast<std::size_t>(rng.uniform(2, 4)), 3);
    REQUIRE(down.monotonicity() == Monotonicity::down);
    const SetInstance plain(down.box(), down.body(), Monotonicity::none);
    REQUIRE(plain.monotonicity() == Monotonicity::none);
    for (int s = 0; s < 5; ++s) {
      const IntBox sub = random_sub_box(rng, down.box());
      CHECK(is_int_feasible(down, sub) == is_int_feasible(plain, sub));
    }
  }
}

TEST_CASE("declared monotonicity is checked on small boxes") {
  const SetInstance pl(IntBox::binary(2), PointList{{{1, 1}}});
  CHECK(pl.monotonicity() == Monotonicity::up);
  CHECK_THROWS_AS(SetInstance(IntBox::binary(2), PointList{{{1, 1}}}, Monotonicity::down),
                  DomainError);
  const SetInstance k(IntBox::from_upper({3, 3}), Knapsack{{1, 2}, 4});
  CHECK(k.monotonicity() == Monotonicity::down);
  const SetInstance odd(IntBox::binary(2), PointList{{{0, 0}, {1, 1}}});
  CHECK(odd.monotonicity() == Monotonicity::none);
}

TEST_CASE("hull membership") {
  const std::vector<RationalVector> gens{q({3, 0, 0}), q({0, 3, 0}), q({0, 0, 3}), q({2, 2, 2})};
  CHECK(hull_member(gens, q({2, 2, 2})));
  CHECK_FALSE(hull_member(gens, q({3, 3, 0})));
  CHECK(testing::fm_hull_member(gens, q({2, 2, 2})));
  CHECK_FALSE(testing::fm_hull_member(gens, q({3, 3, 0})));
  CHECK(hull_member(gens, gens[1]));
  RationalVector centroid(3);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < 3; ++i) centroid[i] += g[i] / 4;
  }
  CHECK(hull_member(gens, centroid));
  CHECK_THROWS_AS(hull_member(std::vector<RationalVector>(65, q({0})), q({0})), ResourceError);

  gen::Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto k = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<RationalVector> g(k, RationalVector(n));
    for (auto& v : g) {
      for (auto& x : v) x = static_cast<long>(rng.uniform(-3, 3));
    }
    RationalVector w(k);
    Rational total = 0;
    for (auto& x : w) {
      x = static_cast<long>(rng.uniform(0, 4));
      total += x;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    RationalVector inside(n), outside(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) inside[i] += w[j] * g[j][i] / total;
      outside[i] = inside[i];
    }
    outside[0] = 4;  // beyond every generator's first coordinate
    CHECK(hull_member(g, inside));
    CHECK_FALSE(hull_member(g, outside));
    RationalVector probe(n);
    for (auto& x : probe) x = Rational(static_cast<long>(rng.uniform(-6, 6)), 2);
    CHECK(hull_member(g, probe) == testing::fm_hull_member(g, probe));
  }
}

TEST_CASE("tighten_bounds") {
  const SetInstance k(IntBox::from_upper({5, 5}), Knapsack{{1, 1}, 1});
  CHECK(tighten_bounds(k) == IntBox::from_upper({1, 1}));
  CHECK(tighten_bounds(knapsack_example()) == knapsack_example().box());
  const SetInstance empty(IntBox::from_upper({2}), PointList{});
  CHECK_THROWS_AS(tighten_bounds(empty), InfeasibleError);
  gen::Rng rng(104);
  for (int t = 0; t < 100; ++t) {
    const auto inst = gen::linear(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 4, 2);
    const auto pts = testing::feasible_points(inst);
    const IntBox tight = tighten_bounds(inst);
    for (std::size_t j = 0; j < inst.dim(); ++j) {
      std::int64_t lo = pts[0][j], hi = pts[0][j];
      for (const auto& p : pts) {
        lo = std::min(lo, p[j]);
        hi = std::max(hi, p[j]);
      }
      CHECK(tight.lower(j) == lo);
      CHECK(tight.upper(j) == hi);
    }
  }
}

TEST_CASE("node cap raises instead of guessing") {
  // x1 + ... + x8 = 1/2 mod 1 has no integer solution; the search must prove it.
  LinearSystem sys;
  RationalVector row(8, Rational(2)), neg(8, Rational(-2));
  sys.A = {row, neg};
  sys.b = {Rational(9), Rational(-9)};
  const SetInstance inst(IntBox::from_upper(IntPoint(8, 3)), sys, Monotonicity::none);
  SolverOptions tiny;
  tiny.node_cap = 10;
  CHECK_THROWS_AS(is_int_feasible(inst, inst.box(), tiny), ResourceError);
  CHECK_FALSE(is_int_feasible(inst, inst.box()));
}

TEST_CASE("submodular oracle validation") {
  CHECK_THROWS_AS(SubmodularOracle::truth_table({1, 1}), DomainError);         // f(empty) != 0
  CHECK_THROWS_AS(SubmodularOracle::truth_table({0, 1, 1}), DomainError);      // not 2^n
  CHECK_THROWS_AS(SubmodularOracle::truth_table({0, 1, 1, 3}), DomainError);   // supermodular
  CHECK_THROWS_AS(SubmodularOracle::truth_table({0, 2, 1, 1}), DomainError);   // decreasing
  CHECK_NOTHROW(SubmodularOracle::truth_table({0, 1, 1, 1}));
  CHECK_THROWS_AS(SubmodularOracle::concave_of_modular({1, 1}, {0, 1, 3}), DomainError);
  CHECK_THROWS_AS(SubmodularOracle::concave_of_modular({1, 1}, {0, 1}), DomainError);
  const auto f = SubmodularOracle::concave_of_modular({1, 2}, {0, 2, 3, 4});
  CHECK(f(0b11) == 4);
  CHECK(f(0b10) == 3);
}

TEST_CASE("complement instances reflect the set") {
  gen::Rng rng(105);
  for (int t = 0; t < 60; ++t) {
    const auto inst = random_instance(rng);
    const auto comp = complement_instance(inst);
    if (!comp) continue;
    for (const auto& x : testing::all_box_points(inst.box())) {
      CHECK(contains(*comp, complement_point(x, inst.box())) == contains(inst, x));
    }
  }
}

TEST_CASE("polymatroid encodings agree") {
  gen::Rng rng(106);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto f = t % 2 ? gen::concave_submodular(rng, n, 2) : gen::coverage_submodular(rng, n);
    const auto a = polymatroid_instance(f);
    const auto b = polymatroid_linear_system(f);
    REQUIRE(a.box() == b.box());
    for (const auto& x : testing::all_box_points(a.box())) {
      CHECK(contains(a, x) == contains(b, x));
      CHECK(contains(a, x) == testing::member(a, x));
    }
  }
}

TEST_CASE("environment overrides the node cap") {
  ::setenv("LEXBOUND_NODE_CAP", "1234", 1);
  CHECK(options_from_environment().node_cap == 1234);
  ::setenv("LEXBOUND_NODE_CAP", "lots", 1);
  CHECK_THROWS_AS(options_from_environment(), DomainError);
  ::unsetenv("LEXBOUND_NODE_CAP");
  CHECK(options_from_environment().node_cap == SolverOptions{}.node_cap);
}
