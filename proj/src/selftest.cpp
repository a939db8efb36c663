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

#include "lexbound/selftest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lexbound/bounds.hpp"
#include "lexbound/bruteforce.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/formulations.hpp"
#include "lexbound/json_io.hpp"
#include "lexbound/lexopt.hpp"
#include "lexbound/random_instances.hpp"
#include "lexbound/structure.hpp"

namespace lexbound {

SelftestLevel selftest_level_from_string(std::string_view s) {
  if (s == "quick") return SelftestLevel::quick;
  if (s == "full") return SelftestLevel::full;
  throw DomainError("unknown selftest level '" + std::string(s) + "'");
}

namespace {

// A check returns an empty string when it passes, else what went wrong.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string expect_point(const IntPoint& got, const IntPoint& want) {
  return got == want ? "" : "got " + to_string(got) + ", want " + to_string(want);
}

SetInstance knapsack_example() {
  return SetInstance(IntBox::from_upper({1, 5, 4, 1, 2}),
                     Knapsack{{2, 8, 40, 150, 310}, 825}, Monotonicity::down);
}

SetInstance triangle() {
  return SetInstance(IntBox::binary(3), IndependenceGraph{{{0, 1}, {0, 2}, {1, 2}}},
                     Monotonicity::down);
}

std::vector<std::pair<std::string, Check>> quick_checks(const SolverOptions& opt) {
  std::vector<std::pair<std::string, Check>> checks;
  auto add = [&](std::string name, Check c) { checks.emplace_back(std::move(name), std::move(c)); };

  add("core.lex_le", [] {
    const auto id = Permutation::identity(2);
    const Permutation swap({1, 0});
    return expect(lex_le({3, 4}, {3, 4}, id) && lex_le({1, 0}, {0, 1}, id) &&
                      !lex_le({0, 1}, {1, 0}, id) && lex_le({0, 1}, {1, 0}, swap),
                  "comparison table wrong");
  });
  add("core.superincreasing_weights", [] {
    const auto w = superincreasing_weights(IntBox::binary(4), Permutation::identity(4));
    const auto k = superincreasing_weights(IntBox::from_upper({1, 5, 4, 1, 2}),
                                           Permutation::identity(5));
    return expect(w == BigWeights{1, 2, 4, 8} && k == BigWeights{1, 2, 12, 60, 120},
                  "weights wrong");
  });
  add("core.monotone_permutation", [] {
    return expect(monotone_permutation({1, 0, 1, 0}).to_one_based() ==
                          std::vector<std::int64_t>{2, 4, 1, 3} &&
                      monotone_permutation({0, 0, 0}) == Permutation::identity(3) &&
                      monotone_permutation({1, 1}) == Permutation::identity(2),
                  "canonical permutation wrong");
  });
  add("core.complement_point", [] {
    return expect_point(complement_point({1, 2}, IntBox::from_upper({1, 5})), {0, 3});
  });
  add("instances.contains", [] {
    const SetInstance v(IntBox::binary(2), VPolytope{{{1, 0}, {0, 1}}});
    return expect(contains(knapsack_example(), {1, 1, 1, 1, 2}) && !contains(v, {0, 0}),
                  "membership wrong");
  });
  add("instances.graph_feasibility", [opt] {
    const SetInstance g(IntBox::binary(2), IndependenceGraph{{{0, 1}}});
    return expect(!is_int_feasible(g, IntBox({1, 1}, {1, 1}), opt), "edge {1,2} allowed");
  });
  add("instances.tighten_bounds", [opt] {
    const SetInstance k(IntBox::from_upper({5, 5}), Knapsack{{1, 1}, 1});
    return expect_point(tighten_bounds(k, opt).upper(), {1, 1});
  });
  add("lexopt.knapsack_example", [opt] {
    const auto inst = knapsack_example();
    const auto id = Permutation::identity(5);
    const IntPoint want{1, 1, 1, 1, 2};
    if (auto e = expect_point(lex_max_greedy(inst, id, opt), want); !e.empty()) return e;
    if (auto e = expect_point(lex_max_bisection(inst, id, opt).point, want); !e.empty()) return e;
    return expect_point(lex_max_sign_separated(inst, id, opt), want);
  });
  add("lexopt.full_box", [opt] {
    const auto inst = box_instance(IntBox({-1, 0, 2}, {1, 3, 2}));
    const Permutation sigma({2, 0, 1});
    if (auto e = expect_point(lex_max_greedy(inst, sigma, opt), {1, 3, 2}); !e.empty()) return e;
    return expect_point(lex_min_greedy(inst, sigma, opt), {-1, 0, 2});
  });
  add("lexopt.bisection_singleton", [opt] {
    const auto r = lex_max_bisection(box_instance(IntBox({2, 3}, {2, 3})),
                                     Permutation::identity(2), opt);
    return expect(r.point == IntPoint{2, 3} && r.feasibility_calls == 1,
                  "expected the point after one call");
  });
  add("lexopt.permutahedron", [] {
    const auto id = Permutation::identity(3);
    if (auto e = expect_point(permutahedron_lex(3, id, Direction::max), {1, 2, 3}); !e.empty()) {
      return e;
    }
    return expect_point(permutahedron_lex(3, id, Direction::min), {3, 2, 1});
  });
  add("lexopt.polymatroid_rank", [] {
    std::vector<std::int64_t> f(16);
    for (std::uint64_t s = 0; s < 16; ++s) f[s] = std::min(std::popcount(s), 2);
    return expect_point(lex_max_polymatroid(SubmodularOracle::truth_table(f),
                                            Permutation::identity(4)),
                        {0, 0, 1, 1});
  });
  add("lexopt.lex_constraint", [opt] {
    const auto inst = box_instance(IntBox::binary(3));
    const LexConstraint c{LexDirection::at_most, Permutation::identity(3), {0, 1, 1}};
    return expect_point(lex_opt_with_lex_constraints(inst, std::span(&c, 1),
                                                     Permutation::identity(3),
                                                     Direction::max, opt),
                        {0, 1, 1});
  });
  add("bounds.family_H1", [] {
    const PermFamily h1 = family_H1(3);
    std::set<int> last;
    for (const auto& p : h1.perms()) last.insert(p.at(2));
    return expect(h1.size() == 3 && last.size() == 3, "last entries not covered");
  });
  add("bounds.full_box", [opt] {
    const auto inst = box_instance(IntBox::from_upper({2, 1, 3}));
    const RationalVector c{1, 2, 1};
    const auto r = compute_bounds(inst, family_H1(3), c, true, opt);
    return expect(r.z_prim->value == 7 && r.z_dual->value == 7 && r.z_star->value == 7,
                  "bounds on the full box should all equal c.u");
  });
  add("structure.triangle", [opt] {
    const auto t = triangle();
    const auto maxi = maximal_points(t, opt);
    const auto mini = minimal_infeasible_points(t, opt);
    return expect(maxi.size() == 3 && mini.size() == 3 && family_H3(t, opt).size() == 3,
                  "triangle should have 3 maximal and 3 minimal infeasible points");
  });
  add("structure.maxi_of_zero", [] {
    const auto m = maxi_of_lex_set(Permutation::identity(3), {0, 0, 0}, IntBox::binary(3));
    return expect(m == std::vector<IntPoint>{{0, 0, 0}}, "expected {0}");
  });
  add("structure.kappa_midpoint", [] {
    const auto k = kappa_family_instance(2, 2);
    return expect(contains(k.instance, {1, 1}), "(1,1) should be in the hull");
  });
  add("formulations.triangle_cover", [opt] {
    const auto t = triangle();
    auto rows = cover_formulation(t, opt);
    if (rows.size() != 3 || !verify_formulation(t, rows, opt)) return std::string("cover system wrong");
    rows.pop_back();
    return expect(!verify_formulation(t, rows, opt), "dropping a row should break exactness");
  });
  add("oracle.no_constraints", [] {
    const IntBox b = IntBox::from_upper({1, 2});
    return expect(oracle::lexset_intersection(b, {}).size() == 6, "expected all 6 box points");
  });
  add("cli.json_round_trip", [] {
    const auto inst = knapsack_example();
    return expect(instance_from_json(instance_to_json(inst)) == inst, "round trip changed the instance");
  });
  return checks;
}

// Seeded differential runs against the enumeration oracle.
std::vector<std::pair<std::string, Check>> full_checks(std::uint64_t seed,
                                                       const SolverOptions& opt) {
  std::vector<std::pair<std::string, Check>> checks;
  auto add = [&](std::string name, Check c) { checks.emplace_back(std::move(name), std::move(c)); };

  add("random.greedy_vs_oracle", [seed, opt] {
    gen::Rng rng(seed ^ 0x1);
    for (int t = 0; t < 40; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
      const auto inst = gen::linear(rng, n, 3, static_cast<std::size_t>(rng.uniform(1, 3)));
      const auto pts = oracle::enumerate(inst);
      const auto sigma = gen::permutation(rng, n);
      for (auto dir : {Direction::max, Direction::min}) {
        const auto got = dir == Direction::max ? lex_max_greedy(inst, sigma, opt)
                                               : lex_min_greedy(inst, sigma, opt);
        if (got != oracle::lex_opt(pts, sigma, dir)) return "instance " + std::to_string(t);
      }
    }
    return std::string();
  });
  add("random.bisection_vs_greedy", [seed, opt] {
    gen::Rng rng(seed ^ 0x2);
    for (int t = 0; t < 40; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
      const auto inst = gen::down_integer(rng, n, 3);
      const auto sigma = gen::permutation(rng, n);
      if (lex_max_bisection(inst, sigma, opt).point != lex_max_greedy(inst, sigma, opt)) {
        return "instance " + std::to_string(t);
      }
    }
    return std::string();
  });
  add("random.primal_H2_tight", [seed, opt] {
    gen::Rng rng(seed ^ 0x3);
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
      const auto inst = gen::binary_instance(rng, n);
      const auto c = gen::objective(rng, n, true);
      const auto r = compute_bounds(inst, family_H2(inst, opt), c, true, opt);
      if (r.z_prim_max->value != r.z_star->value) return "instance " + std::to_string(t);
    }
    return std::string();
  });
  add("random.dual_H3_tight", [seed, opt] {
    gen::Rng rng(seed ^ 0x4);
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
      const auto inst = gen::independence_system(rng, n);
      const auto c = gen::objective(rng, n, false);
      const auto r = compute_bounds(inst, family_H3(inst, opt), c, true, opt);
      if (r.z_dual->value != r.z_star->value) return "instance " + std::to_string(t);
    }
    return std::string();
  });
  add("random.formulations_exact", [seed, opt] {
    gen::Rng rng(seed ^ 0x5);
    for (int t = 0; t < 20; ++t) {
      const auto inst = gen::independence_system(rng, static_cast<std::size_t>(rng.uniform(2, 6)));
      const auto cover = cover_formulation(inst, opt);
      const auto strong = strengthened_formulation(inst, opt);
      if (!verify_formulation(inst, cover, opt) || !verify_formulation(inst, strong, opt) ||
          !dominance_report(cover, strong)) {
        return "instance " + std::to_string(t);
      }
    }
    return std::string();
  });
  add("random.sign_separated_closed_form", [seed, opt] {
    gen::Rng rng(seed ^ 0x6);
    for (int t = 0; t < 40; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
      const auto inst = gen::sign_separated(rng, n, 4, static_cast<std::size_t>(rng.uniform(1, 3)));
      const auto sigma = gen::permutation(rng, n);
      if (lex_max_sign_separated(inst, sigma, opt) !=
          oracle::lex_opt(oracle::enumerate(inst), sigma, Direction::max)) {
        return "instance " + std::to_string(t);
      }
    }
    return std::string();
  });
  return checks;
}

}  // namespace

std::vector<SelftestResult> run_selftest(SelftestLevel level, std::uint64_t seed,
                                         const SolverOptions& options) {
  auto checks = quick_checks(options);
  if (level == SelftestLevel::full) {
    auto more = full_checks(seed, options);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  std::vector<SelftestResult> out;
  for (auto& [name, check] : checks) {
    SelftestResult r{name, false, ""};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lexbound
