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
 * @file core.hpp
 * @brief Lexicographic order primitives: permutations, integer boxes and the
 * superincreasing scalarization.
 *
 * Conventions used across the library:
 *  - Coordinates are 0-based in C++ and 1-based in every serialized form.
 *  - A Permutation maps *positions* to *coordinates*. Position n-1 is the
 *    most significant position when comparing points, so x <=_sigma y is
 *    decided by the highest position p at which x[sigma(p)] != y[sigma(p)].
 */

#ifndef LEXBOUND_CORE_HPP
#define LEXBOUND_CORE_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer point. Coordinates are kept in int64; boxes at desk scale never
/// approach that range, and anything that can grow (weights, objective
/// values, point counts) is arbitrary precision.
using IntPoint = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

class Permutation {
 public:
  Permutation() = default;

  /// @param positions_to_coords 0-based coordinates, entry p is sigma(p).
  /// Throws DomainError unless it is a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> positions_to_coords);

  static Permutation identity(std::size_t n);
  static Permutation reverse(std::size_t n);
  /// Parses the 1-based image list used in JSON and on the command line.
  static Permutation from_one_based(std::span<const std::int64_t> images);

  std::size_t size() const noexcept { return map_.size(); }
  /// Coordinate placed at position `pos` (sigma(pos), 0-based).
  int at(std::size_t pos) const { return map_[pos]; }
  /// Position of coordinate `coord` (sigma^{-1}(coord)).
  int position_of(std::size_t coord) const { return inverse_[coord]; }

  Permutation inverse() const;
  /// sigma . x = (x[sigma(0)], ..., x[sigma(n-1)]).
  IntPoint act(const IntPoint& x) const;
  /// Inverse action: the point y with sigma . y == permuted.
  IntPoint unact(const IntPoint& permuted) const;
  /// Composition (this o other)(p) = this(other(p)).
  Permutation compose(const Permutation& other) const;

  const std::vector<int>& map() const noexcept { return map_; }
  std::vector<std::int64_t> to_one_based() const;
  std::string to_string() const;  // "3,1,2"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<int> map_;
  std::vector<int> inverse_;
};

class IntBox {
 public:
  IntBox() = default;
  /// Throws DimensionError on size mismatch and DomainError unless l <= u.
  IntBox(IntPoint lower, IntPoint upper);

  /// [0, u].
  static IntBox from_upper(IntPoint upper);
  static IntBox binary(std::size_t n);

  std::size_t dim() const noexcept { return lower_.size(); }
  const IntPoint& lower() const noexcept { return lower_; }
  const IntPoint& upper() const noexcept { return upper_; }
  std::int64_t lower(std::size_t i) const { return lower_[i]; }
  std::int64_t upper(std::size_t i) const { return upper_[i]; }
  std::int64_t width(std::size_t i) const { return upper_[i] - lower_[i] + 1; }

  Integer point_count() const;
  /// point_count() when it fits and is <= cap, nullopt otherwise.
  std::optional<std::uint64_t> point_count_if_at_most(std::uint64_t cap) const;

  bool contains(const IntPoint& x) const;
  bool contains(const IntBox& other) const;
  bool is_singleton() const;
  bool is_binary() const;
  bool lower_is_zero() const;

  /// Copy with coordinate i restricted to [lo, hi]; nullopt if that empties it.
  std::optional<IntBox> restrict(std::size_t i, std::int64_t lo,
                                 std::int64_t hi) const;
  IntBox fix(std::size_t i, std::int64_t value) const;
  std::optional<IntBox> intersect(const IntBox& other) const;

  friend bool operator==(const IntBox&, const IntBox&) = default;

 private:
  IntPoint lower_;
  IntPoint upper_;
};

/// lambda with lambda[sigma(p)] = 1 + sum_{q<p} lambda[sigma(q)] u[sigma(q)].
using BigWeights = std::vector<Integer>;

/// x <=_sigma y.
bool lex_le(const IntPoint& x, const IntPoint& y, const Permutation& sigma);
/// Three-way lex comparison under sigma.
std::strong_ordering lex_compare(const IntPoint& x, const IntPoint& y,
                                 const Permutation& sigma);

/// Requires box.lower() == 0.
BigWeights superincreasing_weights(const IntBox& box, const Permutation& sigma);
Integer weighted_sum(const BigWeights& lambda, const IntPoint& x);

/// Zeros first, then ones, each block in ascending index order.
Permutation monotone_permutation(const IntPoint& x);

/// u - x + l.
IntPoint complement_point(const IntPoint& x, const IntBox& box);

/// Componentwise x <= y.
bool dominated_by(const IntPoint& x, const IntPoint& y);

Rational dot(const RationalVector& c, const IntPoint& x);

std::string to_string(const IntPoint& x);

/// Calls visit(x) for every point of the box in ascending order (last
/// coordinate fastest) until it returns false.
void for_each_point(const IntBox& box,
                    const std::function<bool(const IntPoint&)>& visit);

}  // namespace lexbound

#endif  // LEXBOUND_CORE_HPP
