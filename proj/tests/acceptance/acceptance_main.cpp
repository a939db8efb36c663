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

// Acceptance suite: one line per criterion, exit status 1 when any fails.
// Heavy enumeration goes through lexbound::oracle; the header-only oracle in
// tests/support cross-checks it where sizes allow.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lexbound/bounds.hpp"
#include "lexbound/bruteforce.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/formulations.hpp"
#include "lexbound/json_io.hpp"
#include "lexbound/lexopt.hpp"
#include "lexbound/random_instances.hpp"
#include "lexbound/structure.hpp"
#include "support/oracles.hpp"

using namespace lexbound;

namespace {

// Collects failed expectations; keeps the first few messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& m : messages_) os << "\n    " << m;
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_, notes_;
};

struct Context {
  std::uint64_t seed = 0;
  SolverOptions options;
};

std::string str(const IntPoint& x) { return to_string(x); }

std::vector<IntPoint> sorted(std::vector<IntPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

std::size_t dims(gen::Rng& rng, std::int64_t lo, std::int64_t hi) {
  return static_cast<std::size_t>(rng.uniform(lo, hi));
}

// The explicit lex constraints lexmin <= x <= lexmax of each resolved member.
std::vector<LexConstraint> interval_constraints(const ResolvedFamily& r) {
  std::vector<LexConstraint> out;
  for (std::size_t k = 0; k < r.family.size(); ++k) {
    out.push_back({LexDirection::at_least, r.family.perms()[k], r.minima[k]});
    out.push_back({LexDirection::at_most, r.family.perms()[k], r.maxima[k]});
  }
  return out;
}

bool rows_hold(const std::vector<Inequality>& rows, const IntPoint& x) {
  for (const auto& r : rows) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += r.coeffs[j] * x[j];
    if (lhs > r.rhs) return false;
  }
  return true;
}

std::uint64_t bisection_budget(const IntBox& box) {
  std::uint64_t calls = 1 + box.dim();
  for (std::size_t j = 0; j < box.dim(); ++j) {
    const auto width = static_cast<std::uint64_t>(box.upper(j) - box.lower(j) + 1);
    calls += static_cast<std::uint64_t>(std::bit_width(width - 1));  // ceil(log2(width))
  }
  return calls;
}

// 1. Knapsack example.
void knapsack_example(const Context&, Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  const IntBox box = IntBox::from_upper({1, 5, 4, 1, 2});
  const std::vector<std::int64_t> a{2, 8, 40, 150, 310};
  const SetInstance k(box, Knapsack{a, 825}, Monotonicity::down);
  const auto id = Permutation::identity(5);

  const IntPoint theta = lex_max_greedy(k, id);
  t.expect(theta == IntPoint{1, 1, 1, 1, 2}, "lexmax " + str(theta));
  t.expect(is_lex_ordered(k, id), "is_lex_ordered returned false");

  const std::vector<IntPoint> expected{
      {0, 1, 1, 1, 2}, {1, 0, 1, 1, 2}, {1, 5, 0, 1, 2}, {1, 5, 4, 0, 2}, {1, 5, 4, 1, 1}};
  const auto listed = maxi_of_lex_set(id, theta, box);
  std::int64_t best = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const IntPoint p = lex_set_corner(id, theta, box, i);
    t.expect(p == expected[i], "p" + std::to_string(i + 1) + " = " + str(p));
    t.expect(std::find(listed.begin(), listed.end(), p) != listed.end(),
             "maxi_of_lex_set misses " + str(p));
    t.expect(contains(k, p), str(p) + " infeasible");
    std::int64_t ap = 0;
    for (std::size_t j = 0; j < 5; ++j) ap += a[j] * p[j];
    best = std::max(best, ap);
  }
  t.expect(best == 822, "max a.p = " + std::to_string(best));

  const auto pts = oracle::enumerate(k);
  t.expect(pts == testing::feasible_points(k), "oracles disagree on S_I");
  const IntPoint lo = oracle::lex_opt(pts, id, Direction::min);
  const std::vector<LexConstraint> l_id{{LexDirection::at_least, id, lo},
                                        {LexDirection::at_most, id, theta}};
  t.expect(oracle::lexset_intersection(box, l_id) == pts, "S_I differs from L_id");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  t.note("|S_I| = " + std::to_string(pts.size()) + ", max a.p = 822 <= 825");
}

// 2. Scalarization by superincreasing weights.
void scalarization(const Context& ctx, Tally& t) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto w = superincreasing_weights(IntBox::binary(n), Permutation::identity(n));
    bool ok = w.size() == n;
    for (std::size_t i = 0; ok && i < n; ++i) ok = w[i] == Integer(1) << i;
    t.expect(ok, "weights for n = " + std::to_string(n) + " are not powers of 2");
  }

  gen::Rng rng(ctx.seed ^ 0x2);
  std::vector<IntBox> boxes{IntBox::from_upper(IntPoint(4, 9)),  // exactly 10^4 points
                            IntBox::binary(13), IntBox::from_upper({4, 3, 2, 5, 1, 3}),
                            IntBox::from_upper({1, 5, 4, 1, 2})};
  while (boxes.size() < 8) {
    const IntBox b = gen::box(rng, dims(rng, 1, 7), 4);
    if (b.point_count_if_at_most(10'000)) boxes.push_back(b);
  }
  std::size_t all_pairs = 0, sampled = 0;
  for (const auto& box : boxes) {
    const auto pts = oracle::box_points(box);
    for (int s = 0; s < 5; ++s) {
      const auto sigma = gen::permutation(rng, box.dim());
      const auto w = superincreasing_weights(box, sigma);
      std::vector<Integer> lam;
      lam.reserve(pts.size());
      for (const auto& p : pts) lam.push_back(weighted_sum(w, p));
      // Sorted by lambda, the chain must be strictly lex-increasing. With lex_le
      // a total order this settles every pair.
      std::vector<std::size_t> idx(pts.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return lam[x] < lam[y]; });
      bool chain = true;
      for (std::size_t i = 1; i < idx.size() && chain; ++i) {
        const auto& p = pts[idx[i - 1]];
        const auto& q = pts[idx[i]];
        chain = lam[idx[i - 1]] < lam[idx[i]] && lex_le(p, q, sigma) && !lex_le(q, p, sigma) &&
                testing::lex_leq(p, q, sigma);
      }
      t.expect(chain, "lambda chain broken on a box of " + std::to_string(pts.size()) + " points");
      if (pts.size() <= 2500) {
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
          for (std::size_t j = 0; j < pts.size() && ok; ++j) {
            ok = lex_le(pts[i], pts[j], sigma) == (lam[i] <= lam[j]);
          }
        }
        all_pairs += pts.size() * pts.size();
        t.expect(ok, "pairwise mismatch");
      } else {
        bool ok = true;
        for (int r = 0; r < 200'000 && ok; ++r) {
          const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1));
          const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1));
          ok = lex_le(pts[i], pts[j], sigma) == (lam[i] <= lam[j]);
        }
        sampled += 200'000;
        t.expect(ok, "sampled pair mismatch");
      }
    }
  }
  t.note(std::to_string(boxes.size()) + " boxes x 5 sigma, " + std::to_string(all_pairs) +
         " explicit pairs, " + std::to_string(sampled) + " sampled pairs on top of the chains");
}

// 3. Primal 1/n guarantee and the kappa family.
void primal_guarantee(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x3);
  for (int i = 0; i < 100; ++i) {
    const auto n = dims(rng, 1, 5);
    SetInstance inst = [&] {
      switch (i % 5) {
        case 0: return gen::down_integer(rng, n, 3);
        case 1: return gen::linear(rng, n, 3, 2);
        case 2: return gen::knapsack(rng, n, 3);
        case 3: return gen::point_cloud(rng, n, 2);
        default: return gen::binary_instance(rng, n + 1);
      }
    }();
    const auto c = gen::objective(rng, inst.dim(), true);
    const auto r = compute_bounds(inst, family_H1(inst.dim()), c, true, ctx.options);
    const Rational z = testing::best_value(testing::feasible_points(inst), c);
    t.expect(r.z_star->value == z, "z* disagrees with the test oracle");
    t.expect(r.z_prim_max->value * static_cast<long>(inst.dim()) >= z,
             "z_prim_max(H1) < z*/n on instance " + std::to_string(i));
  }
  std::string ratios;
  for (std::int64_t kappa : {2, 10}) {
    for (std::int64_t n : {2, 3, 4}) {
      const auto kf = kappa_family_instance(n, kappa);
      const auto r = compute_bounds(kf.instance, family_all(static_cast<std::size_t>(n)),
                                    ones(static_cast<std::size_t>(n)), true, ctx.options);
      const Rational star = oracle::optimum(oracle::enumerate(kf.instance), ones(static_cast<std::size_t>(n))).value;
      const Rational predicted = Rational(kappa) / Rational((kappa - 1) * n);
      t.expect(r.z_star->value == star, "z* disagrees with the oracle");
      t.expect(star == Rational((kappa - 1) * n), "z* != (kappa-1) n");
      const Rational ratio = r.z_prim->value / r.z_star->value;
      t.expect(ratio == predicted, "ratio " + rational_to_string(ratio) + " for kappa=" +
                                       std::to_string(kappa) + " n=" + std::to_string(n));
      ratios += (ratios.empty() ? "" : " ") + rational_to_string(ratio);
    }
  }
  t.note("kappa ratios " + ratios);
}

// 4. Primal tightness on 0/1 sets.
void primal_binary(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x4);
  std::size_t checked_all = 0, resolved_perms = 0;
  std::map<Monotonicity, int> kinds;
  for (int i = 0; i < 100; ++i) {
    const auto n = dims(rng, 2, 8);
    const auto inst = gen::binary_instance(rng, n);
    ++kinds[inst.monotonicity()];
    const auto c = gen::objective(rng, n, true);
    const auto pts = oracle::enumerate(inst);
    const auto r = compute_bounds(inst, family_H2(inst, ctx.options), c, false, ctx.options);
    const Rational star = oracle::optimum(pts, c).value;
    t.expect(r.z_prim_max->value == star, "z_prim_max(H2) != z* on instance " + std::to_string(i));
    if (n <= 7) {
      const auto resolved = resolve_family(inst, family_all(n), ctx.options);
      resolved_perms += resolved.maxima.size();
      std::set<IntPoint> maxima(resolved.maxima.begin(), resolved.maxima.end());
      const auto maxi = oracle::maximal(pts);
      t.expect(std::vector<IntPoint>(maxima.begin(), maxima.end()) == maxi,
               "lex maxima differ from maximal points on instance " + std::to_string(i));
      t.expect(sorted(maximal_points(inst, ctx.options)) == maxi, "maximal_points disagrees");
      ++checked_all;
    }
  }
  t.note(std::to_string(kinds[Monotonicity::down]) + " down, " +
         std::to_string(kinds[Monotonicity::up]) + " up, " +
         std::to_string(kinds[Monotonicity::none]) + " neither; " + std::to_string(checked_all) +
         " checked over all n! permutations (" +
         std::to_string(resolved_perms) + " lex maxima)");
}

// 5. Dual tightness on 0/1 down-closed sets, and on their complements.
void dual_binary(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x5);
  std::size_t up_checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = dims(rng, 2, 8);
    const auto down = gen::independence_system(rng, n);
    const auto h3 = family_H3(down, ctx.options);
    const auto pts = oracle::enumerate(down);
    const auto resolved = resolve_family(down, h3, ctx.options);
    t.expect(oracle::lexset_intersection(down.box(), interval_constraints(resolved)) == pts,
             "intersection of L over H3 differs from S_I on instance " + std::to_string(i));

    const IntBox& box = down.box();
    std::vector<IntPoint> flipped;
    for (const auto& p : pts) flipped.push_back(complement_point(p, box));
    std::sort(flipped.begin(), flipped.end());
    const auto up_opt = complement_instance(down);
    const SetInstance up = up_opt ? *up_opt : SetInstance(box, PointList{flipped}, Monotonicity::up);
    t.expect(up.monotonicity() == Monotonicity::up, "complement is not up-closed");
    const auto up_pts = oracle::enumerate(up);
    t.expect(up_pts == flipped, "complement enumerates wrongly");
    // Complementing reverses every lex order, so the same permutations serve.
    const auto up_resolved = resolve_family(up, h3, ctx.options);
    t.expect(oracle::lexset_intersection(box, interval_constraints(up_resolved)) == up_pts,
             "up-closed intersection differs from S_I on instance " + std::to_string(i));
    ++up_checked;

    for (int k = 0; k < 10; ++k) {
      const auto c = gen::objective(rng, n, false);
      BoundsReport r;
      dual_bound(down, resolved, c, r, ctx.options);
      t.expect(r.z_dual->value == oracle::optimum(pts, c).value, "z_dual(H3) != z*");
      BoundsReport u;
      dual_bound(up, up_resolved, c, u, ctx.options);
      t.expect(u.z_dual->value == oracle::optimum(up_pts, c).value, "z_dual(H3) != z* (up)");
    }
  }
  t.note(std::to_string(up_checked) + " complements checked");
}

// 6. The simplices family and its dual gap.
void dual_gap(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x6);
  std::string gaps;
  for (std::int64_t n : {4, 5, 6}) {
    for (std::int64_t delta : {2, 3}) {
      const auto s = simplices_instance(n, delta);
      const auto nn = static_cast<std::size_t>(n);
      const PermFamily all = family_all(nn);
      std::vector<Permutation> probe;
      if (n <= 5) {
        probe = all.perms();
      } else {
        for (int k = 0; k < 100; ++k) probe.push_back(gen::permutation(rng, nn));
      }
      for (const auto& sigma : probe) {
        t.expect(s.predicted_lexmax(sigma) == lex_max_greedy(s.instance, sigma, ctx.options),
                 "lexmax formula fails for n=" + std::to_string(n));
      }
      const auto resolved = resolve_family(s.instance, all, ctx.options);
      bool inside = true;
      for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& sigma = all.perms()[k];
        inside = inside && lex_le(resolved.minima[k], s.witness, sigma) &&
                 lex_le(s.witness, resolved.maxima[k], sigma);
      }
      t.expect(inside, "witness outside some L_sigma");
      t.expect(!oracle::member(s.instance, s.witness), "witness lies in S_I");

      const auto r = compute_bounds(s.instance, all, ones(nn), true, ctx.options);
      const auto region = oracle::lexset_intersection(s.instance.box(), interval_constraints(resolved));
      const Rational dual = oracle::optimum(region, ones(nn)).value;
      const Rational star = oracle::optimum(oracle::enumerate(s.instance), ones(nn)).value;
      t.expect(r.z_dual->value == dual, "z_dual disagrees with the oracle");
      t.expect(r.z_star->value == star, "z* disagrees with the oracle");
      t.expect(dual > star, "no strict gap for n=" + std::to_string(n));
      gaps += (gaps.empty() ? "" : ", ") + std::string("(") + std::to_string(n) + "," +
              std::to_string(delta) + "): " + rational_to_string(star) + " < " +
              rational_to_string(dual);
    }
  }
  t.note("z* < z_dual " + gaps);
}

// 7. Closed forms.
void closed_forms(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x7);
  for (int i = 0; i < 200; ++i) {
    const auto inst = gen::sign_separated(rng, dims(rng, 1, 7), 4, dims(rng, 1, 3));
    const auto pts = oracle::enumerate(inst);
    const auto sigma = gen::permutation(rng, inst.dim());
    t.expect(lex_max_sign_separated(inst, sigma, ctx.options) ==
                 oracle::lex_opt(pts, sigma, Direction::max),
             "sign-separated lexmax differs on instance " + std::to_string(i));
    t.expect(lex_min_sign_separated(inst, sigma, ctx.options) ==
                 oracle::lex_opt(pts, sigma, Direction::min),
             "sign-separated lexmin differs on instance " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    const auto n = dims(rng, 1, 7);
    const auto f = i % 2 ? gen::concave_submodular(rng, n, 3) : gen::coverage_submodular(rng, n);
    const auto inst = polymatroid_instance(f);
    for (int k = 0; k < 10; ++k) {
      const auto sigma = gen::permutation(rng, n);
      t.expect(lex_max_polymatroid(f, sigma) == lex_max_greedy(inst, sigma, ctx.options),
               "polymatroid formula differs from the greedy recursion");
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<IntPoint> vertices;
    IntPoint v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      vertices.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    const PermFamily all = family_all(n);
    for (const auto& sigma : all.perms()) {
      const auto mx = permutahedron_lex(n, sigma, Direction::max);
      const auto mn = permutahedron_lex(n, sigma, Direction::min);
      t.expect(mx == oracle::lex_opt(vertices, sigma, Direction::max), "permutahedron lexmax");
      t.expect(mn == oracle::lex_opt(vertices, sigma, Direction::min), "permutahedron lexmin");
      bool formula = true;
      for (std::size_t p = 0; p < n; ++p) {
        formula = formula && mx[sigma.at(p)] == static_cast<std::int64_t>(p + 1) &&
                  mn[sigma.at(p)] == static_cast<std::int64_t>(n - p);
      }
      t.expect(formula, "permutahedron entries off");
    }
  }
  t.note("200 sign-separated, 50 x 10 polymatroid, permutahedra n <= 6");
}

// 8. Bisection against greedy, with the call budget.
void bisection(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x8);
  std::uint64_t worst = 0, budget_at_worst = 0;
  for (int i = 0; i < 200; ++i) {
    const auto n = dims(rng, 1, 5);
    SetInstance inst = [&] {
      switch (i % 6) {
        case 0: return gen::linear(rng, n, 4, dims(rng, 1, 3));
        case 1: return gen::sign_separated(rng, n, 4, 2);
        case 2: return gen::knapsack(rng, n, 4);
        case 3: return gen::down_integer(rng, n, 4);
        case 4: return gen::point_cloud(rng, n, 3);
        default: return gen::binary_instance(rng, n + 1);
      }
    }();
    const auto pts = oracle::enumerate(inst);
    const auto budget = bisection_budget(inst.box());
    for (int k = 0; k < 5; ++k) {
      const auto sigma = gen::permutation(rng, inst.dim());
      const auto bmax = lex_max_bisection(inst, sigma, ctx.options);
      const auto bmin = lex_min_bisection(inst, sigma, ctx.options);
      t.expect(bmax.point == lex_max_greedy(inst, sigma, ctx.options), "bisection max != greedy");
      t.expect(bmin.point == lex_min_greedy(inst, sigma, ctx.options), "bisection min != greedy");
      t.expect(bmax.point == oracle::lex_opt(pts, sigma, Direction::max), "bisection max != oracle");
      t.expect(bmax.feasibility_calls <= budget && bmin.feasibility_calls <= budget,
               "call budget exceeded: " + std::to_string(bmax.feasibility_calls) + " > " +
                   std::to_string(budget));
      if (bmax.feasibility_calls > worst) {
        worst = bmax.feasibility_calls;
        budget_at_worst = budget;
      }
    }
  }
  t.note("most calls " + std::to_string(worst) + " against a budget of " +
         std::to_string(budget_at_worst));
}

// 9. Cover and strengthened formulations.
void formulations(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0x9);
  std::size_t graphs = 0, rows_cover = 0, rows_strong = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = dims(rng, 2, 8);
    const bool is_graph = i % 3 == 0;
    const auto inst = is_graph ? gen::graph(rng, n, 0.4) : gen::independence_system(rng, n);
    const auto cover = cover_formulation(inst, ctx.options);
    const auto strong = strengthened_formulation(inst, ctx.options);
    rows_cover += cover.size();
    rows_strong += strong.size();
    bool exact = true;
    for (const auto& x : oracle::box_points(inst.box())) {
      const bool in = oracle::member(inst, x);
      exact = exact && rows_hold(cover, x) == in && rows_hold(strong, x) == in;
    }
    t.expect(exact, "formulation not exact on instance " + std::to_string(i));
    for (const auto& c : cover) {
      t.expect(std::any_of(strong.begin(), strong.end(),
                           [&](const Inequality& s) { return same_up_to_scaling(c, s); }),
               "cover row missing from the strengthened system");
    }
    if (const auto* g = std::get_if<IndependenceGraph>(&inst.body()); g && is_graph) {
      std::set<std::pair<int, int>> edges;
      for (auto [u, v] : g->edges) edges.insert({std::min(u, v), std::max(u, v)});
      t.expect(oracle::minimal_infeasible(inst).size() == edges.size(),
               "minimal infeasible count != |E|");
      t.expect(cover.size() == edges.size(), "cover row count != |E|");
      ++graphs;
    }
  }
  t.note(std::to_string(graphs) + " stable-set instances; " + std::to_string(rows_cover) +
         " cover rows, " + std::to_string(rows_strong) + " strengthened rows");
}

// 10. Extended formulation of down-closed integer sets.
void extended(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0xa);
  std::size_t points = 0;
  for (int i = 0; i < 50; ++i) {
    const auto n = dims(rng, 1, 5);
    const auto inst = i % 2 ? gen::packing(rng, n, 3) : gen::knapsack(rng, n, 3);
    const auto ef = extended_formulation(inst, ctx.options);
    const auto pts = oracle::enumerate(inst);
    const auto maxi = oracle::maximal(pts);
    for (const auto& g : ef.generators) {
      t.expect(std::binary_search(maxi.begin(), maxi.end(), g), "generator is not maximal");
    }
    // One step past the box on each side is enough to see the orthant cut.
    IntPoint lo(n, -1), hi = inst.box().upper();
    for (auto& v : hi) ++v;
    bool ok = true;
    for (const auto& x : oracle::box_points(IntBox(lo, hi))) {
      ok = ok && ef.admits(x) == (inst.box().contains(x) && oracle::member(inst, x));
      ++points;
    }
    t.expect(ok, "extended formulation admits the wrong points on instance " + std::to_string(i));
  }
  t.note(std::to_string(points) + " integer points decided by exact hull membership");
}

// 11. Explicit lex constraints by fixing enumeration.
void explicit_constraints(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0xb);
  std::size_t infeasible = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = dims(rng, 1, 6);
    const auto inst = i % 2 ? gen::linear(rng, n, 3, dims(rng, 1, 2)) : gen::packing(rng, n, 3);
    std::vector<LexConstraint> cons;
    const auto m = rng.uniform(0, 2);
    for (std::int64_t k = 0; k < m; ++k) cons.push_back(gen::lex_constraint(rng, inst.box()));
    std::vector<IntPoint> kept;
    for (const auto& p : oracle::enumerate(inst)) {
      if (std::all_of(cons.begin(), cons.end(), [&](const auto& c) { return c.satisfied_by(p); })) {
        kept.push_back(p);
      }
    }
    const auto sigma = gen::permutation(rng, n);
    for (Direction dir : {Direction::max, Direction::min}) {
      if (kept.empty()) {
        bool threw = false;
        try {
          lex_opt_with_lex_constraints(inst, cons, sigma, dir, ctx.options);
        } catch (const InfeasibleError&) {
          threw = true;
        }
        t.expect(threw, "expected an infeasible report");
        continue;
      }
      t.expect(lex_opt_with_lex_constraints(inst, cons, sigma, dir, ctx.options) ==
                   oracle::lex_opt(kept, sigma, dir),
               "fixing enumeration differs from brute force on pair " + std::to_string(i));
    }
    if (kept.empty()) ++infeasible;
  }
  t.note(std::to_string(infeasible) + " of 100 pairs infeasible");
}

// 12. Monotone bounds along nested families.
void sandwich(const Context& ctx, Tally& t) {
  gen::Rng rng(ctx.seed ^ 0xc);
  for (int i = 0; i < 50; ++i) {
    const auto n = dims(rng, 1, 4);
    SetInstance inst = [&] {
      switch (i % 4) {
        case 0: return gen::linear(rng, n, 3, 2);
        case 1: return gen::down_integer(rng, n, 3);
        case 2: return gen::point_cloud(rng, n, 2);
        default: return gen::binary_instance(rng, n + 1);
      }
    }();
    const auto d = inst.dim();
    const PermFamily h({gen::permutation(rng, d)});
    const PermFamily h1 = h.merged(family_H1(d)).merged(PermFamily({gen::permutation(rng, d)}));
    const PermFamily h2 = h1.merged(family_all(d));
    const auto c = gen::objective(rng, d, false);
    const auto a = compute_bounds(inst, h, c, true, ctx.options);
    const auto b = compute_bounds(inst, h1, c, false, ctx.options);
    const auto e = compute_bounds(inst, h2, c, false, ctx.options);
    const Rational z = testing::best_value(testing::feasible_points(inst), c);
    t.expect(a.z_star->value == z, "z* disagrees with the test oracle");
    t.expect(a.z_prim->value <= b.z_prim->value && b.z_prim->value <= e.z_prim->value,
             "z_prim decreased along the chain on instance " + std::to_string(i));
    t.expect(e.z_prim->value <= z && z <= e.z_dual->value, "bounds do not bracket z*");
    t.expect(a.z_dual->value >= b.z_dual->value && b.z_dual->value >= e.z_dual->value,
             "z_dual increased along the chain on instance " + std::to_string(i));
  }
  t.note("50 chains H, H + H1, + all n!");
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(const Context&, Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexbound acceptance suite"};
  std::uint64_t seed = 20260101;
  unsigned jobs = 1;
  std::vector<int> only;
  app.add_option("--seed", seed, "Seed for every randomized criterion");
  app.add_option("--jobs", jobs, "Worker threads");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  Context ctx;
  ctx.seed = seed;
  try {
    ctx.options = options_from_environment();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  ctx.options.jobs = jobs;

  const std::vector<Criterion> criteria{
      {1, "knapsack example", knapsack_example},
      {2, "scalarization order equivalence", scalarization},
      {3, "primal 1/n guarantee and kappa family", primal_guarantee},
      {4, "primal tightness on 0/1 sets", primal_binary},
      {5, "dual tightness on 0/1 monotone sets", dual_binary},
      {6, "dual gap on the simplices family", dual_gap},
      {7, "closed-form lex optima", closed_forms},
      {8, "bisection against greedy", bisection},
      {9, "cover and strengthened formulations", formulations},
      {10, "extended formulation", extended},
      {11, "explicit lex constraints", explicit_constraints},
      {12, "bound sandwich along nested families", sandwich},
  };

  std::cout << "seed " << seed << '\n';
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ctx, tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (tally.passed() ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " ("
              << timing << "): " << tally.summary() << std::endl;
    if (!tally.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
