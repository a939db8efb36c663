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

#include "lexbound/exact_lp.hpp"

#include "lexbound/errors.hpp"

namespace lexbound::lp {

std::optional<RationalVector> find_nonnegative_solution(
    const std::vector<RationalVector>& A, const RationalVector& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw DimensionError("lp: rows of A and b differ");
  const std::size_t n = m ? A[0].size() : 0;
  for (const auto& row : A) {
    if (row.size() != n) throw DimensionError("lp: ragged constraint matrix");
  }
  if (m == 0) return RationalVector(n, Rational(0));

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<RationalVector> t(m, RationalVector(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
    t[i][rhs] = flip ? -b[i] : b[i];
    t[i][n + i] = 1;
    basis[i] = n + i;
  }
  // Reduced costs of min sum(artificials).
  RationalVector cost(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw std::logic_error("lp: unbounded phase-one ray");

    const Rational pivot = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[leave][j] != 0) t[leave][j] /= pivot;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (cost[rhs] != 0) return std::nullopt;
  RationalVector z(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) z[basis[i]] = t[i][rhs];
  }
  return z;
}

std::optional<RationalVector> hull_point_in_box(
    const std::vector<RationalVector>& generators, const RationalVector& lower,
    const std::optional<RationalVector>& upper) {
  const std::size_t k = generators.size();
  const std::size_t n = lower.size();
  if (k == 0) return std::nullopt;
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionError("hull: generator dimension");
  }
  if (upper && upper->size() != n) throw DimensionError("hull: upper bound");

  // Variables: alpha (k), surplus s (n) with sum alpha g - s = lower, and,
  // when bounded above, t (n) with s + t = upper - lower.
  const std::size_t vars = k + n + (upper ? n : 0);
  std::vector<RationalVector> A;
  RationalVector b;
  RationalVector convexity(vars, Rational(0));
  for (std::size_t a = 0; a < k; ++a) convexity[a] = 1;
  A.push_back(std::move(convexity));
  b.emplace_back(1);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(vars, Rational(0));
    for (std::size_t a = 0; a < k; ++a) row[a] = generators[a][i];
    row[k + i] = -1;
    A.push_back(std::move(row));
    b.push_back(lower[i]);
  }
  if (upper) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector row(vars, Rational(0));
      row[k + i] = 1;
      row[k + n + i] = 1;
      A.push_back(std::move(row));
      b.push_back((*upper)[i] - lower[i]);
    }
  }
  auto z = find_nonnegative_solution(A, b);
  if (!z) return std::nullopt;
  RationalVector point(n, Rational(0));
  for (std::size_t a = 0; a < k; ++a) {
    if ((*z)[a] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) point[i] += (*z)[a] * generators[a][i];
  }
  return point;
}

}  // namespace lexbound::lp
