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

#ifndef LEXBOUND_EXACT_LP_HPP
#define LEXBOUND_EXACT_LP_HPP

#include <optional>
#include <vector>

#include "lexbound/core.hpp"

namespace lexbound::lp {

/// Phase-one simplex over the rationals with Bland's rule: returns some
/// z >= 0 with A z = b, or nullopt if none exists. Exact, always terminates.
std::optional<RationalVector> find_nonnegative_solution(
    const std::vector<RationalVector>& A, const RationalVector& b);

/// Some point of conv(generators) inside {x : lower <= x <= upper}, where a
/// missing upper bound means +infinity. Returns the point (not the weights).
std::optional<RationalVector> hull_point_in_box(
    const std::vector<RationalVector>& generators, const RationalVector& lower,
    const std::optional<RationalVector>& upper);

}  // namespace lexbound::lp

#endif  // LEXBOUND_EXACT_LP_HPP
