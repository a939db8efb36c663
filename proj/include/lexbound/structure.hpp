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
 * @file structure.hpp
 * @brief Maximal and minimal points, lex-ordered sets, and two instance
 * families with known lex structure.
 */

#ifndef LEXBOUND_STRUCTURE_HPP
#define LEXBOUND_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "lexbound/bounds.hpp"
#include "lexbound/instances.hpp"

namespace lexbound {

/// Points of S_I with no feasible strict dominator, ascending. Enumerates the
/// box when it has at most options.enumeration_cap points. Polymatroid bodies
/// on larger boxes fall back to the distinct greedy vertices over all
/// permutations (n <= 9), which are the maximal vertices of P_f.
std::vector<IntPoint> maximal_points(const SetInstance& inst,
                                     const SolverOptions& options = {});

/// Minimal points of {0,1}^n minus S_I, ascending. Independence graphs use
/// one point e_i + e_j per edge without enumeration.
std::vector<IntPoint> minimal_infeasible_points(const SetInstance& inst,
                                                const SolverOptions& options = {});

/// The point p^{sigma,i} for 0-based position i: theta with coordinate
/// sigma(i) lowered by one and every less significant coordinate raised to
/// its upper bound.
IntPoint lex_set_corner(const Permutation& sigma, const IntPoint& theta,
                        const IntBox& box, std::size_t i);

/// theta followed by p^{sigma,i} for every position i (ascending) with
/// theta[sigma(i)] > l[sigma(i)], duplicates removed. Some of these may be
/// dominated by theta; see maxi_of_lex_set_filtered.
std::vector<IntPoint> maxi_of_lex_set(const Permutation& sigma, const IntPoint& theta,
                                      const IntBox& box);
/// The formula points that no other formula point dominates: exactly the
/// maximal points of { x in box : x <=_sigma theta }.
std::vector<IntPoint> maxi_of_lex_set_filtered(const Permutation& sigma,
                                               const IntPoint& theta,
                                               const IntBox& box);

/// For a down-closed instance: whether S_I equals L_sigma, tested through
/// the corner points of the lexmax. DomainError unless tagged down.
bool is_lex_ordered(const SetInstance& inst, const Permutation& sigma,
                    const SolverOptions& options = {});

struct DualTightness {
  bool tight = true;
  /// A maximal point of the intersection of the L_sigma outside S_I.
  std::optional<IntPoint> counterexample;
};

/// Whether every maximal point of the intersection of L_sigma over H lies in
/// S_I (for down-closed S this is equivalent to z_dual = z* for every c >= 0).
DualTightness dual_tightness_check(const SetInstance& inst, const PermFamily& family,
                                   const SolverOptions& options = {});

/// { x in [0,delta]^n : sum x <= (delta - 1) n }, tagged down.
struct SimplicesFamily {
  SetInstance instance;
  std::int64_t n = 0;
  std::int64_t delta = 0;
  std::int64_t rho = 0;  // floor((delta - 1) n / delta)
  /// Predicted lexmax listed by position: (0,...,0, (delta-1)n - delta rho,
  /// delta,...,delta) with rho trailing deltas.
  IntPoint lexmax_by_position;
  /// A point of every L_sigma outside S_I: (delta-1) on the first n+1-rho
  /// coordinates, delta on the rest.
  IntPoint witness;

  IntPoint predicted_lexmax(const Permutation& sigma) const;
};

SimplicesFamily simplices_instance(std::int64_t n, std::int64_t delta);

/// conv{kappa e_1, ..., kappa e_n, (kappa-1) 1} on the box [0,kappa]^n.
struct KappaFamily {
  SetInstance instance;
  std::int64_t n = 0;
  std::int64_t kappa = 0;
  /// max 1.x over S_I.
  Rational z_star;
  /// Primal bound over any family divided by z_star.
  Rational primal_ratio;

  IntPoint lexmax(const Permutation& sigma) const;  // kappa e_{sigma(n)}
  IntPoint lexmin(const Permutation& sigma) const;  // kappa e_{sigma(1)}
};

KappaFamily kappa_family_instance(std::int64_t n, std::int64_t kappa);

}  // namespace lexbound

#endif  // LEXBOUND_STRUCTURE_HPP
