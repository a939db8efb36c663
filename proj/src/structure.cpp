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

#include "lexbound/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lexbound/errors.hpp"
#include "lexbound/lexopt.hpp"

namespace lexbound {
namespace {

std::int64_t coordinate_sum(const IntPoint& x) {
  return std::accumulate(x.begin(), x.end(), std::int64_t{0});
}

bool strictly_dominates(const IntPoint& y, const IntPoint& x) {
  return y != x && dominated_by(x, y);
}

// Maximal elements of a point set. A point with a strict dominator also has
// a maximal one, and that one has a larger coordinate sum, so scanning by
// decreasing sum only needs to compare against points already kept.
std::vector<IntPoint> maximal_by_dominance(std::vector<IntPoint> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const IntPoint& a, const IntPoint& b) {
                     return coordinate_sum(a) > coordinate_sum(b);
                   });
  std::vector<IntPoint> kept;
  for (auto& x : points) {
    const bool beaten = std::any_of(kept.begin(), kept.end(), [&](const IntPoint& y) {
      return strictly_dominates(y, x);
    });
    if (!beaten && std::find(kept.begin(), kept.end(), x) == kept.end()) {
      kept.push_back(std::move(x));
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<IntPoint> minimal_by_dominance(std::vector<IntPoint> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const IntPoint& a, const IntPoint& b) {
                     return coordinate_sum(a) < coordinate_sum(b);
                   });
  std::vector<IntPoint> kept;
  for (auto& x : points) {
    const bool beaten = std::any_of(kept.begin(), kept.end(), [&](const IntPoint& y) {
      return strictly_dominates(x, y);
    });
    if (!beaten && std::find(kept.begin(), kept.end(), x) == kept.end()) {
      kept.push_back(std::move(x));
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void require_down(const SetInstance& inst, const char* what) {
  if (inst.monotonicity() != Monotonicity::down) {
    throw DomainError(std::string(what) + " needs a down-closed instance (tag is " +
                      std::string(to_string(inst.monotonicity())) + ")");
  }
}

}  // namespace

std::vector<IntPoint> maximal_points(const SetInstance& inst,
                                     const SolverOptions& options) {
  const IntBox& box = inst.box();
  if (box.point_count_if_at_most(options.enumeration_cap)) {
    const bool down = inst.monotonicity() == Monotonicity::down;
    std::vector<IntPoint> feasible;
    for_each_point(box, [&](const IntPoint& x) {
      if (contains(inst, x)) feasible.push_back(x);
      return true;
    });
    if (!down) return maximal_by_dominance(std::move(feasible));
    // Down-closed: maximal iff no single coordinate can be raised.
    std::vector<IntPoint> out;
    for (const auto& x : feasible) {
      bool maximal = true;
      IntPoint y = x;
      for (std::size_t j = 0; j < x.size() && maximal; ++j) {
        if (x[j] == box.upper(j)) continue;
        ++y[j];
        if (contains(inst, y)) maximal = false;
        --y[j];
      }
      if (maximal) out.push_back(x);
    }
    return out;
  }

  if (const auto* f = std::get_if<SubmodularOracle>(&inst.body())) {
    const std::size_t n = f->size();
    IntPoint singletons(n);
    for (std::size_t i = 0; i < n; ++i) singletons[i] = f->singleton(i);
    // Matroid bases are exactly the vertices; integer polymatroids can have
    // non-vertex bases, so only the 0/1 case may skip enumeration.
    if (n <= 9 && box.is_binary() && box.upper() == singletons) {
      std::set<IntPoint> vertices;
      std::vector<int> map(n);
      std::iota(map.begin(), map.end(), 0);
      do {
        vertices.insert(lex_max_polymatroid(*f, Permutation(map)));
      } while (std::next_permutation(map.begin(), map.end()));
      return {vertices.begin(), vertices.end()};
    }
  }
  throw ResourceError("box has more than " + std::to_string(options.enumeration_cap) +
                      " points; maximal points need enumeration");
}

std::vector<IntPoint> minimal_infeasible_points(const SetInstance& inst,
                                                const SolverOptions& options) {
  const IntBox& box = inst.box();
  if (!box.is_binary()) {
    throw DomainError("minimal infeasible points need the box [0,1]^n");
  }
  const std::size_t n = inst.dim();
  if (const auto* g = std::get_if<IndependenceGraph>(&inst.body())) {
    std::set<IntPoint> points;
    for (auto [i, j] : g->edges) {
      IntPoint v(n, 0);
      v[i] = 1;
      v[j] = 1;
      points.insert(std::move(v));
    }
    return {points.begin(), points.end()};
  }
  if (!box.point_count_if_at_most(options.enumeration_cap)) {
    throw ResourceError("binary box too large to enumerate");
  }
  std::vector<IntPoint> infeasible;
  for_each_point(box, [&](const IntPoint& x) {
    if (!contains(inst, x)) infeasible.push_back(x);
    return true;
  });
  if (inst.monotonicity() != Monotonicity::down) {
    return minimal_by_dominance(std::move(infeasible));
  }
  // The complement is up-closed: minimal iff every single drop is feasible.
  std::vector<IntPoint> out;
  for (const auto& x : infeasible) {
    bool minimal = true;
    IntPoint y = x;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      if (x[j] == 0) continue;
      y[j] = 0;
      if (!contains(inst, y)) minimal = false;
      y[j] = 1;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

IntPoint lex_set_corner(const Permutation& sigma, const IntPoint& theta,
                        const IntBox& box, std::size_t i) {
  IntPoint p = theta;
  p[sigma.at(i)] -= 1;
  for (std::size_t j = 0; j < i; ++j) p[sigma.at(j)] = box.upper(sigma.at(j));
  return p;
}

std::vector<IntPoint> maxi_of_lex_set(const Permutation& sigma, const IntPoint& theta,
                                      const IntBox& box) {
  if (sigma.size() != box.dim() || theta.size() != box.dim()) {
    throw DimensionError("permutation, threshold and box dimensions differ");
  }
  if (!box.contains(theta)) throw DomainError("threshold lies outside the box");
  std::vector<IntPoint> out{theta};
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const int c = sigma.at(i);
    if (theta[c] <= box.lower(c)) continue;
    IntPoint p = lex_set_corner(sigma, theta, box, i);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<IntPoint> maxi_of_lex_set_filtered(const Permutation& sigma,
                                               const IntPoint& theta,
                                               const IntBox& box) {
  const auto all = maxi_of_lex_set(sigma, theta, box);
  std::vector<IntPoint> out;
  for (const auto& p : all) {
    const bool beaten = std::any_of(all.begin(), all.end(), [&](const IntPoint& q) {
      return strictly_dominates(q, p);
    });
    if (!beaten) out.push_back(p);
  }
  return out;
}

bool is_lex_ordered(const SetInstance& inst, const Permutation& sigma,
                    const SolverOptions& options) {
  require_down(inst, "is_lex_ordered");
  const IntBox& box = inst.box();
  const IntPoint theta = lex_opt(inst, sigma, Direction::max, options);
  for (std::size_t i = 0; i < inst.dim(); ++i) {
    const int c = sigma.at(i);
    if (theta[c] <= box.lower(c)) continue;
    if (!contains(inst, lex_set_corner(sigma, theta, box, i))) return false;
  }
  return true;
}

DualTightness dual_tightness_check(const SetInstance& inst, const PermFamily& family,
                                   const SolverOptions& options) {
  require_down(inst, "dual_tightness_check");
  const ResolvedFamily resolved = resolve_family(inst, family, options);
  const auto constraints = dual_constraints(inst, resolved);
  auto region = lex_region_points(inst.box(), constraints, options);
  DualTightness result;
  for (const auto& x : maximal_by_dominance(std::move(region))) {
    if (!contains(inst, x)) {
      result.tight = false;
      result.counterexample = x;
      break;
    }
  }
  return result;
}

IntPoint SimplicesFamily::predicted_lexmax(const Permutation& sigma) const {
  if (sigma.size() != lexmax_by_position.size()) {
    throw DimensionError("permutation size does not match the instance");
  }
  IntPoint x(lexmax_by_position.size());
  for (std::size_t p = 0; p < x.size(); ++p) x[sigma.at(p)] = lexmax_by_position[p];
  return x;
}

SimplicesFamily simplices_instance(std::int64_t n, std::int64_t delta) {
  if (n < 4 || delta < 2) throw DomainError("simplices family needs n >= 4 and delta >= 2");
  if (n > 64 || delta > (1LL << 20)) throw ResourceError("simplices parameters too large");
  const std::size_t dim = static_cast<std::size_t>(n);
  const std::int64_t rho = (delta - 1) * n / delta;
  IntPoint lexmax(dim, 0);
  lexmax[dim - rho - 1] = (delta - 1) * n - delta * rho;
  for (std::size_t p = dim - rho; p < dim; ++p) lexmax[p] = delta;
  IntPoint witness(dim, delta);
  for (std::size_t p = 0; p < dim + 1 - rho; ++p) witness[p] = delta - 1;
  Knapsack body{std::vector<std::int64_t>(dim, 1), (delta - 1) * n};
  SimplicesFamily fam{
      .instance = SetInstance(IntBox::from_upper(IntPoint(dim, delta)), std::move(body),
                              Monotonicity::down),
      .n = n,
      .delta = delta,
      .rho = rho,
      .lexmax_by_position = std::move(lexmax),
      .witness = std::move(witness)};
  return fam;
}

IntPoint KappaFamily::lexmax(const Permutation& sigma) const {
  IntPoint x(static_cast<std::size_t>(n), 0);
  x[sigma.at(x.size() - 1)] = kappa;
  return x;
}

IntPoint KappaFamily::lexmin(const Permutation& sigma) const {
  IntPoint x(static_cast<std::size_t>(n), 0);
  x[sigma.at(0)] = kappa;
  return x;
}

KappaFamily kappa_family_instance(std::int64_t n, std::int64_t kappa) {
  if (n < 2 || kappa < 2) throw DomainError("kappa family needs n >= 2 and kappa >= 2");
  if (n > 10) throw ResourceError("kappa family is limited to n <= 10");
  const std::size_t dim = static_cast<std::size_t>(n);
  VPolytope body;
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector g(dim, Rational(0));
    g[i] = static_cast<long>(kappa);
    body.generators.push_back(std::move(g));
  }
  body.generators.emplace_back(dim, Rational(static_cast<long>(kappa - 1)));
  const Rational z_star(static_cast<long>((kappa - 1) * n));
  KappaFamily fam{
      .instance = SetInstance(IntBox::from_upper(IntPoint(dim, kappa)), std::move(body),
                              Monotonicity::none),
      .n = n,
      .kappa = kappa,
      .z_star = z_star,
      .primal_ratio = Rational(static_cast<long>(kappa)) / z_star};
  return fam;
}

}  // namespace lexbound
