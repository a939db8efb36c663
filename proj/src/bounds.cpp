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

#include "lexbound/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lexbound/bruteforce.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/lexsets.hpp"
#include "lexbound/parallel.hpp"
#include "lexbound/structure.hpp"

namespace lexbound {

PermFamily::PermFamily(std::vector<Permutation> perms) {
  std::set<Permutation> seen;
  for (auto& p : perms) {
    if (!perms_.empty() && p.size() != perms_.front().size()) {
      throw DimensionError("permutations in a family must have equal size");
    }
    if (seen.insert(p).second) perms_.push_back(std::move(p));
  }
}

PermFamily PermFamily::merged(const PermFamily& other) const {
  std::vector<Permutation> all = perms_;
  all.insert(all.end(), other.perms_.begin(), other.perms_.end());
  return PermFamily(std::move(all));
}

namespace {

std::vector<LexClass> group(const std::vector<Permutation>& perms,
                            const std::vector<IntPoint>& points) {
  std::vector<LexClass> classes;
  std::map<IntPoint, std::size_t> index;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    auto [it, fresh] = index.emplace(points[k], classes.size());
    if (fresh) classes.push_back({points[k], perms[k], 0});
    ++classes[it->second].multiplicity;
  }
  return classes;
}

}  // namespace

ResolvedFamily resolve_family(const SetInstance& inst, const PermFamily& family,
                              const SolverOptions& options) {
  ResolvedFamily r;
  r.family = family;
  const auto& perms = family.perms();
  for (const auto& p : perms) {
    if (p.size() != inst.dim()) {
      throw DimensionError("family permutation size does not match the instance");
    }
  }
  using Pair = std::pair<IntPoint, IntPoint>;
  auto optima = parallel_map<Pair>(perms.size(), options.jobs, [&](std::size_t k) {
    return Pair{lex_opt(inst, perms[k], Direction::max, options),
                lex_opt(inst, perms[k], Direction::min, options)};
  });
  for (auto& [mx, mn] : optima) {
    r.maxima.push_back(std::move(mx));
    r.minima.push_back(std::move(mn));
  }
  r.max_classes = group(perms, r.maxima);
  r.min_classes = group(perms, r.minima);
  return r;
}

namespace {

std::optional<BoundValue> best_class(const std::vector<LexClass>& classes,
                                     const RationalVector& c) {
  std::optional<BoundValue> best;
  for (const auto& cls : classes) {
    Rational v = dot(c, cls.point);
    if (!best || v > best->value) best = BoundValue{v, cls.point, cls.representative};
  }
  return best;
}

void check_objective(const SetInstance& inst, const RationalVector& c) {
  if (c.size() != inst.dim()) {
    throw DimensionError("objective has " + std::to_string(c.size()) +
                         " entries, instance has dimension " + std::to_string(inst.dim()));
  }
}

}  // namespace

void primal_bound(const SetInstance& inst, const ResolvedFamily& family,
                  const RationalVector& c, BoundsReport& report) {
  check_objective(inst, c);
  report.family_size = family.family.size();
  report.distinct_maxima = family.max_classes.size();
  report.distinct_minima = family.min_classes.size();
  report.z_prim_max = best_class(family.max_classes, c);
  report.z_prim_min = best_class(family.min_classes, c);
  if (report.z_prim_max) {
    report.z_prim = report.z_prim_max;
    if (report.z_prim_min->value > report.z_prim->value) report.z_prim = report.z_prim_min;
  }
}

std::vector<LexConstraint> dual_constraints(const SetInstance& inst,
                                            const ResolvedFamily& family) {
  std::vector<LexConstraint> out;
  const auto& perms = family.family.perms();
  for (std::size_t k = 0; k < perms.size(); ++k) {
    LexConstraint hi{LexDirection::at_most, perms[k], family.maxima[k]};
    LexConstraint lo{LexDirection::at_least, perms[k], family.minima[k]};
    if (!is_vacuous(hi, inst.box())) out.push_back(std::move(hi));
    if (!is_vacuous(lo, inst.box())) out.push_back(std::move(lo));
  }
  return out;
}

std::vector<IntPoint> lex_region_points(const IntBox& box,
                                        std::span<const LexConstraint> constraints,
                                        const SolverOptions& options) {
  if (!box.point_count_if_at_most(options.enumeration_cap)) {
    throw ResourceError("box has more than " + std::to_string(options.enumeration_cap) +
                        " points; too large to enumerate");
  }
  std::vector<IntPoint> out;
  for_each_point(box, [&](const IntPoint& x) {
    for (const auto& c : constraints) {
      if (!c.satisfied_by(x)) return true;
    }
    out.push_back(x);
    return true;
  });
  return out;
}

void dual_bound(const SetInstance& inst, const ResolvedFamily& family,
                const RationalVector& c, BoundsReport& report,
                const SolverOptions& options) {
  check_objective(inst, c);
  const auto constraints = dual_constraints(inst, family);
  report.dual_constraints = constraints.size();
  std::optional<BoundValue> best;
  auto offer = [&](const IntPoint& x) {
    Rational v = dot(c, x);
    if (!best || v > best->value) best = BoundValue{v, x, std::nullopt};
  };

  if (constraints.size() <= options.fixing_cap) {
    report.dual_method = "fixing";
    // c.x over a box is maximized coordinatewise by the sign of c.
    for_each_fixing_cell(
        inst.box(), constraints,
        [&](const IntBox& cell) {
          IntPoint x(cell.dim());
          for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = c[j] < 0 ? cell.lower(j) : cell.upper(j);
          }
          offer(x);
          return true;
        },
        options.node_cap);
  } else if (inst.box().point_count_if_at_most(options.enumeration_cap)) {
    report.dual_method = "enumeration";
    for (const auto& x : lex_region_points(inst.box(), constraints, options)) offer(x);
  } else {
    throw ResourceError(std::to_string(constraints.size()) +
                        " lex constraints exceed the fixing cap and the box is "
                        "too large to enumerate");
  }
  if (!best) throw InfeasibleError("the intersection of lex-ordered sets is empty");
  report.z_dual = std::move(best);
}

Optimum optimum_bruteforce(const SetInstance& inst, const RationalVector& c,
                           const SolverOptions& options) {
  check_objective(inst, c);
  const auto points = oracle::enumerate(inst, options.enumeration_cap);
  if (points.empty()) throw InfeasibleError("instance has no integer points");
  auto r = oracle::optimum(points, c);
  return {std::move(r.value), std::move(r.argmax)};
}

BoundsReport compute_bounds(const SetInstance& inst, const PermFamily& family,
                            const RationalVector& c, bool ground_truth,
                            const SolverOptions& options) {
  check_objective(inst, c);
  BoundsReport report;
  const ResolvedFamily resolved = resolve_family(inst, family, options);
  primal_bound(inst, resolved, c, report);
  dual_bound(inst, resolved, c, report, options);
  if (ground_truth) {
    auto opt = optimum_bruteforce(inst, c, options);
    report.z_star = BoundValue{opt.value, opt.argmax.front(), std::nullopt};
  }
  return report;
}

PermFamily family_H1(std::size_t n) {
  if (n == 0) throw DomainError("families need n >= 1");
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> map(n);
    for (std::size_t p = 0; p < n; ++p) map[p] = static_cast<int>((k + 1 + p) % n);
    perms.emplace_back(std::move(map));
  }
  return PermFamily(std::move(perms));
}

PermFamily family_H2(const SetInstance& inst, const SolverOptions& options) {
  if (!inst.box().is_binary()) throw DomainError("H2 needs the box [0,1]^n");
  std::vector<Permutation> perms;
  for (const auto& x : maximal_points(inst, options)) {
    perms.push_back(monotone_permutation(x));
  }
  return PermFamily(std::move(perms));
}

PermFamily family_H3(const SetInstance& inst, const SolverOptions& options) {
  if (!inst.box().is_binary()) throw DomainError("H3 needs the box [0,1]^n");
  std::vector<Permutation> perms;
  for (const auto& v : minimal_infeasible_points(inst, options)) {
    perms.push_back(monotone_permutation(v));
  }
  return PermFamily(std::move(perms));
}

PermFamily family_all(std::size_t n) {
  if (n == 0) throw DomainError("families need n >= 1");
  if (n > 9) throw ResourceError("all permutations are limited to n <= 9");
  std::vector<Permutation> perms;
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  do {
    perms.emplace_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return PermFamily(std::move(perms));
}

}  // namespace lexbound
