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

#include "lexbound/formulations.hpp"

#include <algorithm>
#include <set>

#include "lexbound/bounds.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/exact_lp.hpp"
#include "lexbound/lexopt.hpp"
#include "lexbound/structure.hpp"

namespace lexbound {

std::string_view to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::cover: return "cover";
    case InequalityKind::strengthened: return "strengthened";
    case InequalityKind::box: return "box";
  }
  return "box";
}

bool Inequality::satisfied_by(const IntPoint& x) const {
  return dot(coeffs, x) <= rhs;
}

namespace {

void require_down_binary(const SetInstance& inst) {
  if (!inst.box().is_binary()) {
    throw DomainError("formulation needs the box [0,1]^n");
  }
  if (inst.monotonicity() != Monotonicity::down) {
    throw DomainError("formulation needs a down-closed instance (tag is " +
                      std::string(to_string(inst.monotonicity())) + ")");
  }
}

std::int64_t count_zeros(const IntPoint& v) {
  return std::count(v.begin(), v.end(), 0);
}

// The lexmax of an independence system under sigma. Sign-separated rows have
// a closed form; everything else goes through the greedy recursion.
IntPoint lexmax_for_rows(const SetInstance& inst, const Permutation& sigma,
                         const SolverOptions& options) {
  if (inst.has_sign_separated_rows()) {
    try {
      return lex_max_sign_separated(inst, sigma, options);
    } catch (const DomainError&) {
      // untightened bounds; fall through to the recursion
    }
  }
  return lex_opt(inst, sigma, Direction::max, options);
}

}  // namespace

std::vector<Inequality> cover_formulation(const SetInstance& inst,
                                          const SolverOptions& options) {
  require_down_binary(inst);
  const std::size_t n = inst.dim();
  std::vector<Inequality> out;
  for (const auto& v : minimal_infeasible_points(inst, options)) {
    Inequality row;
    row.coeffs.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 1) row.coeffs[j] = 1;
    }
    row.rhs = static_cast<long>(static_cast<std::int64_t>(n) - count_zeros(v) - 1);
    row.provenance = {InequalityKind::cover, v, 0};
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Inequality> strengthened_formulation(const SetInstance& inst,
                                                 const SolverOptions& options) {
  require_down_binary(inst);
  const std::size_t n = inst.dim();
  std::vector<Inequality> out;
  for (const auto& v : minimal_infeasible_points(inst, options)) {
    const std::size_t k = static_cast<std::size_t>(count_zeros(v));
    const Permutation sigma = monotone_permutation(v);
    const IntPoint theta = lexmax_for_rows(inst, sigma, options);
    // 1-based positions 1..k+1 split by theta.
    auto theta_at = [&](std::size_t pos) { return theta[sigma.at(pos - 1)]; };
    for (std::size_t i = 1; i <= k + 1; ++i) {
      if (theta_at(i) != 0) continue;
      Inequality row;
      row.coeffs.assign(n, Rational(0));
      row.coeffs[sigma.at(i - 1)] = 1;
      std::int64_t later_ones = 0;
      for (std::size_t j = i + 1; j <= k + 1; ++j) {
        if (theta_at(j) == 1) {
          row.coeffs[sigma.at(j - 1)] = 1;
          ++later_ones;
        }
      }
      for (std::size_t j = k + 2; j <= n; ++j) row.coeffs[sigma.at(j - 1)] = 1;
      row.rhs = static_cast<long>(static_cast<std::int64_t>(n - k) - 1 + later_ones);
      row.provenance = {InequalityKind::strengthened, v, i};
      out.push_back(std::move(row));
    }
  }
  return out;
}

bool ExtendedFormulation::admits(const IntPoint& x) const {
  if (generators.empty()) return false;
  for (auto v : x) {
    if (v < 0) return false;
  }
  std::vector<RationalVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(to_rational(g));
  return lp::hull_point_in_box(gens, to_rational(x), std::nullopt).has_value();
}

std::string ExtendedFormulation::template_description() const {
  return binary ? "x_i <= sum_{theta : theta_i = 1} alpha_theta, sum alpha = 1, "
                  "alpha >= 0, x >= 0"
                : "x <= sum_y alpha_y y, sum alpha = 1, alpha >= 0, x >= 0";
}

ExtendedFormulation extended_formulation(const SetInstance& inst,
                                         const SolverOptions& options) {
  if (inst.monotonicity() != Monotonicity::down) {
    throw DomainError("extended formulation needs a down-closed instance");
  }
  if (!inst.box().lower_is_zero()) {
    throw DomainError("extended formulation needs lower bounds 0");
  }
  ExtendedFormulation ef;
  ef.binary = inst.box().is_binary();
  if (ef.binary) {
    std::set<IntPoint> maxima;
    const PermFamily h2 = family_H2(inst, options);
    for (const auto& sigma : h2.perms()) {
      maxima.insert(lex_opt(inst, sigma, Direction::max, options));
    }
    ef.generators.assign(maxima.begin(), maxima.end());
    return ef;
  }
  // A maximal p is a vertex iff no point of conv(M \ {p}) dominates it: S
  // minus a maximal point is still down-closed, and so is its hull within
  // the nonnegative orthant.
  const auto maximal = maximal_points(inst, options);
  std::vector<RationalVector> rational;
  for (const auto& p : maximal) rational.push_back(to_rational(p));
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < maximal.size(); ++j) {
      if (j != k) others.push_back(rational[j]);
    }
    if (others.empty() ||
        !lp::hull_point_in_box(others, rational[k], std::nullopt).has_value()) {
      ef.generators.push_back(maximal[k]);
    }
  }
  return ef;
}

bool verify_formulation(const SetInstance& inst, const std::vector<Inequality>& rows,
                        const SolverOptions& options) {
  if (!inst.box().is_binary()) throw DomainError("verification needs the box [0,1]^n");
  if (!inst.box().point_count_if_at_most(options.enumeration_cap)) {
    throw ResourceError("binary box too large to enumerate");
  }
  for (const auto& r : rows) {
    if (r.coeffs.size() != inst.dim()) throw DimensionError("row dimension mismatch");
  }
  bool exact = true;
  for_each_point(inst.box(), [&](const IntPoint& x) {
    const bool by_rows = std::all_of(rows.begin(), rows.end(),
                                     [&](const Inequality& r) { return r.satisfied_by(x); });
    if (by_rows != contains(inst, x)) exact = false;
    return exact;
  });
  return exact;
}

bool same_up_to_scaling(const Inequality& a, const Inequality& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  // Find the scale from the first nonzero entry of a.
  std::optional<Rational> scale;
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    if ((a.coeffs[j] == 0) != (b.coeffs[j] == 0)) return false;
    if (a.coeffs[j] != 0 && !scale) scale = b.coeffs[j] / a.coeffs[j];
  }
  if (!scale) {
    // 0 <= rhs: the whole space or nothing.
    return (a.rhs >= 0) == (b.rhs >= 0);
  }
  if (*scale <= 0) return false;
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    if (a.coeffs[j] * *scale != b.coeffs[j]) return false;
  }
  return a.rhs * *scale == b.rhs;
}

bool dominance_report(const std::vector<Inequality>& cover,
                      const std::vector<Inequality>& strengthened) {
  return std::all_of(cover.begin(), cover.end(), [&](const Inequality& c) {
    return std::any_of(strengthened.begin(), strengthened.end(),
                       [&](const Inequality& s) { return same_up_to_scaling(c, s); });
  });
}

}  // namespace lexbound
