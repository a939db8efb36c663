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
 * @file lexsets.hpp
 * @brief Fixing decomposition of explicit lex constraints into sub-boxes.
 *
 * Over the integers, x <=_tau theta holds iff x = theta or x lies in one of
 * the n boxes
 *
 *     B_p = { x : x[tau(p)] <= theta[tau(p)] - 1,
 *                 x[tau(q)]  = theta[tau(q)]  for q > p },
 *
 * and symmetrically for >=. The pieces are pairwise disjoint, so intersecting
 * one piece per constraint partitions box-and-constraints into disjoint
 * sub-boxes ("cells").
 */

#ifndef LEXBOUND_LEXSETS_HPP
#define LEXBOUND_LEXSETS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lexbound/instances.hpp"

namespace lexbound {

/// Non-empty pieces of `constraint` clipped to `box`: the threshold point
/// first (when inside the box), then B_0, B_1, ..., B_{n-1}, i.e. in order of
/// decreasing number of fixed coordinates.
std::vector<IntBox> lex_constraint_pieces(const IntBox& box,
                                          const LexConstraint& constraint);

/// Visits every non-empty cell of the decomposition of `box` under all
/// `constraints`. Stops early when `visit` returns false. Throws
/// ResourceError after `node_cap` intersections.
void for_each_fixing_cell(const IntBox& box,
                          std::span<const LexConstraint> constraints,
                          const std::function<bool(const IntBox&)>& visit,
                          std::uint64_t node_cap);

/// A lex constraint that every point of `box` satisfies (threshold at the
/// relevant extreme corner).
bool is_vacuous(const LexConstraint& constraint, const IntBox& box);

}  // namespace lexbound

#endif  // LEXBOUND_LEXSETS_HPP
