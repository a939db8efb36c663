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
 * @file bruteforce.hpp
 * @brief Definitional ground truth by full enumeration.
 *
 * Nothing in here calls the search, lex optimization or bound code. Row
 * bodies are evaluated straight from their rational data rather than through
 * the scaled row system, so a bug there cannot hide from this module. The
 * only shared pieces are lex_le and exact hull membership for vpolytopes.
 */

#ifndef LEXBOUND_BRUTEFORCE_HPP
#define LEXBOUND_BRUTEFORCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lexbound/instances.hpp"
#include "lexbound/lexopt.hpp"

namespace lexbound::oracle {

constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Membership evaluated from the body definition.
bool member(const SetInstance& inst, const IntPoint& x);

/// Every point of `sub` in S, ascending (coordinate 1 most significant).
/// Throws ResourceError beyond `cap` sub-box points.
std::vector<IntPoint> enumerate(const SetInstance& inst, const IntBox& sub,
                                std::uint64_t cap = kEnumerationCap);
std::vector<IntPoint> enumerate(const SetInstance& inst,
                                std::uint64_t cap = kEnumerationCap);

/// Every point of the box, ascending.
std::vector<IntPoint> box_points(const IntBox& box,
                                 std::uint64_t cap = kEnumerationCap);

/// Lex-greatest (or least) element by scanning. DomainError on empty input.
IntPoint lex_opt(std::span<const IntPoint> points, const Permutation& sigma,
                 Direction dir);

/// Points of the list not strictly dominated by another point of the list.
std::vector<IntPoint> maximal(std::span<const IntPoint> points);
/// Points of the list that strictly dominate no other point of the list.
std::vector<IntPoint> minimal(std::span<const IntPoint> points);

struct OptimumResult {
  Rational value;
  std::vector<IntPoint> argmax;
};
/// DomainError on empty input.
OptimumResult optimum(std::span<const IntPoint> points, const RationalVector& c);

/// Box points satisfying every constraint.
std::vector<IntPoint> lexset_intersection(const IntBox& box,
                                          std::span<const LexConstraint> constraints,
                                          std::uint64_t cap = kEnumerationCap);

/// Minimal points of {0,1}^n minus S_I. DomainError unless the box is binary.
std::vector<IntPoint> minimal_infeasible(const SetInstance& inst);

}  // namespace lexbound::oracle

#endif  // LEXBOUND_BRUTEFORCE_HPP
