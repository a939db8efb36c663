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
 * @file lexopt.hpp
 * @brief Lexicographic maxima and minima of S_I under a permutation.
 *
 * Every routine here returns the unique lex-optimal integer point. They differ
 * in what they need from the instance: the greedy recursion and box bisection
 * only call is_int_feasible, while the closed forms read the representation.
 */

#ifndef LEXBOUND_LEXOPT_HPP
#define LEXBOUND_LEXOPT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "lexbound/instances.hpp"

namespace lexbound {

enum class Direction { max, min };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);

/// Fixes coordinates from the most significant position down, each to its
/// extreme value that keeps S_I nonempty; the extreme is found by bisection.
/// Throws InfeasibleError when S_I is empty.
IntPoint lex_max_greedy(const SetInstance& inst, const Permutation& sigma,
                        const SolverOptions& options = {});
IntPoint lex_min_greedy(const SetInstance& inst, const Permutation& sigma,
                        const SolverOptions& options = {});

/// Greedy restricted to a sub-box of the instance box; nullopt when S_I does
/// not meet it.
std::optional<IntPoint> lex_opt_in_box(const SetInstance& inst, const IntBox& sub,
                                       const Permutation& sigma, Direction dir,
                                       const SolverOptions& options = {});

struct BisectionResult {
  IntPoint point;
  std::uint64_t feasibility_calls = 0;
};

/// Box bisection: repeatedly halves the most significant unfixed coordinate,
/// keeping the upper half whenever it still meets S_I. Uses at most
/// 1 + sum_i ceil(log2(u_i - l_i + 1)) feasibility calls.
BisectionResult lex_max_bisection(const SetInstance& inst, const Permutation& sigma,
                                  const SolverOptions& options = {});
/// Mirror image, keeping the lower half.
BisectionResult lex_min_bisection(const SetInstance& inst, const Permutation& sigma,
                                  const SolverOptions& options = {});

/// Closed form for sign-separated rows (sign_separated, knapsack, indep_graph
/// bodies, or linear bodies whose columns happen to separate). Coordinates
/// with nonpositive columns go to u; the others, most significant first, take
/// the largest value the remaining row slack allows. Refuses boxes whose upper
/// bounds are not tight.
IntPoint lex_max_sign_separated(const SetInstance& inst, const Permutation& sigma,
                                const SolverOptions& options = {});
/// Mirror image; refuses boxes whose lower bounds are not tight.
IntPoint lex_min_sign_separated(const SetInstance& inst, const Permutation& sigma,
                                const SolverOptions& options = {});

/// x[sigma(p)] = f(T_p) - f(T_{p+1}) with T_p = {sigma(p), ..., sigma(n-1)}.
IntPoint lex_max_polymatroid(const SubmodularOracle& f, const Permutation& sigma);
/// Always the zero vector.
IntPoint lex_min_polymatroid(const SubmodularOracle& f, const Permutation& sigma);

/// Lex optimum over the permutahedron P_n: x[sigma(p)] = p + 1 for max and
/// n - p for min (0-based positions).
IntPoint permutahedron_lex(std::size_t n, const Permutation& sigma, Direction dir);

/// Lex optimum of S_I intersected with explicit lex constraints, by the fixing
/// decomposition: each cell is a sub-box, optimized with lex_opt_in_box.
/// Cells whose best corner cannot beat the incumbent are skipped. Throws
/// ResourceError when more than options.fixing_cap constraints are given and
/// InfeasibleError when no cell contains a point of S_I.
IntPoint lex_opt_with_lex_constraints(const SetInstance& inst,
                                      std::span<const LexConstraint> constraints,
                                      const Permutation& sigma, Direction dir,
                                      const SolverOptions& options = {});

/// Picks the cheapest exact method for the representation.
IntPoint lex_opt(const SetInstance& inst, const Permutation& sigma, Direction dir,
                 const SolverOptions& options = {});

}  // namespace lexbound

#endif  // LEXBOUND_LEXOPT_HPP
