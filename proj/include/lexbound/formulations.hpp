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
 * @file formulations.hpp
 * @brief Linear descriptions of down-closed sets built from their minimal
 * infeasible points and lex maxima.
 *
 * For a minimal infeasible v of a 0/1 independence system with k zeros, the
 * cover inequality forbids setting all of v's ones together:
 *
 *     sum_{v_i = 1} x_i <= n - k - 1.
 *
 * The strengthened system adds, for the canonical monotone permutation s of v
 * and theta = lexmax_s, one row for every position i <= k+1 with
 * theta[s(i)] = 0 (positions 1-based):
 *
 *     x_s(i) + sum_{j in I1, j > i} x_s(j) + sum_{j >= k+2} x_s(j)
 *         <= n - k - 1 + |{j in I1 : j > i}|,
 *
 * where I1 holds the positions j <= k+1 with theta[s(j)] = 1. Row i = k+1 is
 * the cover inequality itself.
 */

#ifndef LEXBOUND_FORMULATIONS_HPP
#define LEXBOUND_FORMULATIONS_HPP

#include <string>
#include <vector>

#include "lexbound/instances.hpp"

namespace lexbound {

enum class InequalityKind { cover, strengthened, box };

std::string_view to_string(InequalityKind k);

struct Provenance {
  InequalityKind kind = InequalityKind::cover;
  IntPoint v;             // the minimal infeasible point
  std::size_t i = 0;      // 1-based position, strengthened rows only
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// coeffs . x <= rhs.
struct Inequality {
  RationalVector coeffs;
  Rational rhs;
  Provenance provenance;

  bool satisfied_by(const IntPoint& x) const;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Cover rows, ordered by v ascending. Needs a down-closed 0/1 instance.
std::vector<Inequality> cover_formulation(const SetInstance& inst,
                                          const SolverOptions& options = {});

/// Strengthened rows, ordered by (v, i). Needs a down-closed 0/1 instance.
std::vector<Inequality> strengthened_formulation(const SetInstance& inst,
                                                 const SolverOptions& options = {});

/// x <= sum_y alpha_y y, sum alpha = 1, alpha >= 0, x >= 0 over the
/// generators y. Its integer points are exactly S_I for a down-closed S.
struct ExtendedFormulation {
  std::vector<IntPoint> generators;
  bool binary = false;

  /// Whether some convex combination of the generators dominates x >= 0.
  bool admits(const IntPoint& x) const;
  std::string template_description() const;
};

/// 0/1 boxes: the distinct lex maxima (one monotone permutation per maximal
/// point suffices). Otherwise: the maximal points that are vertices of the
/// hull of S_I. Needs a down-closed instance with lower bounds 0 and an
/// enumerable box.
ExtendedFormulation extended_formulation(const SetInstance& inst,
                                         const SolverOptions& options = {});

/// Whether the binary points satisfying every row are exactly S_I.
bool verify_formulation(const SetInstance& inst, const std::vector<Inequality>& rows,
                        const SolverOptions& options = {});

/// a.x <= b and a'.x <= b' describe the same half-space with a positive scale.
bool same_up_to_scaling(const Inequality& a, const Inequality& b);

/// Every cover row appears (up to positive scaling) among the strengthened rows.
bool dominance_report(const std::vector<Inequality>& cover,
                      const std::vector<Inequality>& strengthened);

}  // namespace lexbound

#endif  // LEXBOUND_FORMULATIONS_HPP
