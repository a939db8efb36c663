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

/**
 * @file bounds.hpp
 * @brief Lex primal and dual bounds for max c.x over S_I.
 *
 * For a family H of permutations, the primal bound is the best objective
 * value among the lex maxima and minima of S_I under H; these are feasible
 * points, so the bound is from below. The dual bound maximizes c.x over the
 * intersection of the lex-ordered sets
 *
 *     L_sigma = { x in box : lexmin_sigma <=_sigma x <=_sigma lexmax_sigma },
 *
 * each of which contains S_I, so the bound is from above.
 */

#ifndef LEXBOUND_BOUNDS_HPP
#define LEXBOUND_BOUNDS_HPP

#include <optional>
#include <vector>

#include "lexbound/instances.hpp"
#include "lexbound/lexopt.hpp"

namespace lexbound {

/// A list of permutations, kept in the given order with duplicates removed.
class PermFamily {
 public:
  PermFamily() = default;
  explicit PermFamily(std::vector<Permutation> perms);

  const std::vector<Permutation>& perms() const noexcept { return perms_; }
  std::size_t size() const noexcept { return perms_.size(); }
  bool empty() const noexcept { return perms_.empty(); }

  /// This family followed by the members of `other` not already in it.
  PermFamily merged(const PermFamily& other) const;

 private:
  std::vector<Permutation> perms_;
};

/// One class of the quotient of H by equal lex optima.
struct LexClass {
  IntPoint point;
  Permutation representative;  // first member of H in family order
  std::size_t multiplicity = 0;
};

/// A family with the lex optimum of every member computed.
struct ResolvedFamily {
  PermFamily family;
  std::vector<IntPoint> maxima;  // maxima[k] under family.perms()[k]
  std::vector<IntPoint> minima;
  std::vector<LexClass> max_classes;  // ordered by first appearance
  std::vector<LexClass> min_classes;
};

ResolvedFamily resolve_family(const SetInstance& inst, const PermFamily& family,
                              const SolverOptions& options = {});

struct BoundValue {
  Rational value;
  IntPoint point;
  std::optional<Permutation> perm;  // the permutation that produced it
};

struct BoundsReport {
  std::optional<BoundValue> z_prim_max;
  std::optional<BoundValue> z_prim_min;
  std::optional<BoundValue> z_prim;  // the larger of the two
  std::optional<BoundValue> z_dual;
  std::optional<BoundValue> z_star;
  std::size_t family_size = 0;
  std::size_t distinct_maxima = 0;
  std::size_t distinct_minima = 0;
  /// Nontrivial lex constraints that defined the dual region.
  std::size_t dual_constraints = 0;
  /// "fixing" or "enumeration".
  std::string dual_method;
};

/// Fills the primal fields. Empty families leave them unset.
void primal_bound(const SetInstance& inst, const ResolvedFamily& family,
                  const RationalVector& c, BoundsReport& report);
/// Fills z_dual. Uses the fixing decomposition when the nontrivial lex
/// constraints number at most options.fixing_cap, enumeration of the box when
/// it has at most options.enumeration_cap points, and throws ResourceError
/// otherwise.
void dual_bound(const SetInstance& inst, const ResolvedFamily& family,
                const RationalVector& c, BoundsReport& report,
                const SolverOptions& options = {});

/// Resolves the family and fills both bounds; with ground_truth also z_star.
BoundsReport compute_bounds(const SetInstance& inst, const PermFamily& family,
                            const RationalVector& c, bool ground_truth,
                            const SolverOptions& options = {});

/// The lex constraints lexmin_sigma <=_sigma x <=_sigma lexmax_sigma for every
/// member of the family, minus those every box point satisfies.
std::vector<LexConstraint> dual_constraints(const SetInstance& inst,
                                            const ResolvedFamily& family);

/// Box points satisfying all of `constraints`, in ascending order. Throws
/// ResourceError beyond options.enumeration_cap box points.
std::vector<IntPoint> lex_region_points(const IntBox& box,
                                        std::span<const LexConstraint> constraints,
                                        const SolverOptions& options = {});

/// n cyclic shifts of the identity; the k-th has sigma(n) = k.
PermFamily family_H1(std::size_t n);
/// One canonical monotone permutation per maximal point of a 0/1 instance.
PermFamily family_H2(const SetInstance& inst, const SolverOptions& options = {});
/// One canonical monotone permutation per minimal infeasible point.
PermFamily family_H3(const SetInstance& inst, const SolverOptions& options = {});
/// All n! permutations in lexicographic order of their maps (n <= 9).
PermFamily family_all(std::size_t n);

struct Optimum {
  Rational value;
  std::vector<IntPoint> argmax;
};

/// max c.x over S_I by enumeration (box of at most options.enumeration_cap
/// points). InfeasibleError when S_I is empty.
Optimum optimum_bruteforce(const SetInstance& inst, const RationalVector& c,
                           const SolverOptions& options = {});

}  // namespace lexbound

#endif  // LEXBOUND_BOUNDS_HPP
