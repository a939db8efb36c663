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

#ifndef LEXBOUND_ROW_SYSTEM_HPP
#define LEXBOUND_ROW_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lexbound/core.hpp"

namespace lexbound::detail {

/// A <= system with every row scaled by the lcm of its denominators, so all
/// data is integral. Row scaling is positive, which leaves the feasible set
/// and every ratio b_i / a_ij unchanged.
///
/// When all coefficients, right-hand sides and box bounds are below 2^40 in
/// magnitude the row evaluations run in 128-bit arithmetic; otherwise they
/// fall back to GMP. Both paths are exact.
class RowSystem {
 public:
  RowSystem(const std::vector<RationalVector>& A, const RationalVector& b,
            std::size_t n, const IntBox& box);

  std::size_t row_count() const noexcept { return rhs_.size(); }
  std::size_t col_count() const noexcept { return n_; }
  const Integer& coef(std::size_t i, std::size_t j) const {
    return coef_[i * n_ + j];
  }
  const Integer& rhs(std::size_t i) const { return rhs_[i]; }

  /// +1: column has no negative entry. -1: no positive entry and at least
  /// one negative. 0: mixed signs.
  int column_sign(std::size_t j) const { return column_sign_[j]; }
  bool sign_separated() const noexcept { return sign_separated_; }

  bool satisfied(const IntPoint& x) const;
  /// Every row's minimum over `sub` is within its right-hand side. For sign
  /// separated columns all rows share one minimizing corner, so this is an
  /// exact feasibility test; for mixed columns it is only a necessary one.
  bool row_minima_feasible(const IntBox& sub) const;
  /// Depth-first search with interval propagation. Throws ResourceError when
  /// more than node_cap nodes are expanded.
  std::optional<IntPoint> find_point(const IntBox& sub,
                                     std::uint64_t node_cap) const;

 private:
  template <typename T>
  friend class RowSearch;

  std::size_t n_;
  std::vector<Integer> coef_;  // row-major
  std::vector<Integer> rhs_;
  std::vector<int> column_sign_;
  bool sign_separated_ = true;
  bool narrow_ = false;
  std::vector<__int128> coef128_;
  std::vector<__int128> rhs128_;
};

}  // namespace lexbound::detail

#endif  // LEXBOUND_ROW_SYSTEM_HPP
