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

#include "lexbound/row_system.hpp"

#include <cstdlib>
#include <string>

#include "lexbound/errors.hpp"

namespace lexbound::detail {
namespace {

constexpr long kNarrowLimit = 1L << 40;

bool narrow(const Integer& v) { return abs(v) < kNarrowLimit; }

__int128 to_i128(const Integer& v) { return static_cast<__int128>(v.get_si()); }

// Floor of a / b for b > 0.
__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

__int128 widen(std::int64_t v, const __int128*) { return v; }
Integer widen(std::int64_t v, const Integer*) { return Integer(static_cast<long>(v)); }

std::int64_t clamp_to_i64(const __int128& v) {
  if (v > INT64_MAX) return INT64_MAX;
  if (v < INT64_MIN) return INT64_MIN;
  return static_cast<std::int64_t>(v);
}

std::int64_t clamp_to_i64(const Integer& v) {
  if (v > Integer(static_cast<long>(INT64_MAX))) return INT64_MAX;
  if (v < Integer(static_cast<long>(INT64_MIN))) return INT64_MIN;
  return v.get_si();
}

}  // namespace

template <typename T>
class RowSearch {
 public:
  RowSearch(const std::vector<T>& coef, const std::vector<T>& rhs,
            std::size_t n, std::uint64_t node_cap)
      : coef_(coef), rhs_(rhs), n_(n), m_(rhs.size()), node_cap_(node_cap) {}

  std::optional<IntPoint> run(const IntBox& sub) {
    IntPoint lo = sub.lower();
    IntPoint hi = sub.upper();
    if (search(lo, hi)) return lo;
    return std::nullopt;
  }

 private:
  T row_min(std::size_t i, const IntPoint& lo, const IntPoint& hi) const {
    T s = 0;
    const T* row = &coef_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] > 0) {
        s += row[j] * widen(lo[j], static_cast<const T*>(nullptr));
      } else if (row[j] < 0) {
        s += row[j] * widen(hi[j], static_cast<const T*>(nullptr));
      }
    }
    return s;
  }

  // Tightens [lo, hi] against every row; false if some row cannot be met.
  bool propagate(IntPoint& lo, IntPoint& hi) const {
    constexpr int kMaxPasses = 64;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
      bool changed = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const T slack = rhs_[i] - row_min(i, lo, hi);
        if (slack < 0) return false;
        const T* row = &coef_[i * n_];
        for (std::size_t j = 0; j < n_; ++j) {
          if (row[j] > 0) {
            const T cap = widen(lo[j], static_cast<const T*>(nullptr)) +
                          floor_div(slack, row[j]);
            if (cap < widen(hi[j], static_cast<const T*>(nullptr))) {
              hi[j] = clamp_to_i64(cap);
              changed = true;
            }
          } else if (row[j] < 0) {
            const T neg = -row[j];
            const T floor_ = widen(hi[j], static_cast<const T*>(nullptr)) -
                             floor_div(slack, neg);
            if (floor_ > widen(lo[j], static_cast<const T*>(nullptr))) {
              lo[j] = clamp_to_i64(floor_);
              changed = true;
            }
          }
        }
      }
      if (!changed) return true;
    }
    return true;
  }

  bool search(IntPoint& lo, IntPoint& hi) {
    if (++nodes_ > node_cap_) {
      throw ResourceError("feasibility search exceeded " +
                          std::to_string(node_cap_) + " nodes");
    }
    if (!propagate(lo, hi)) return false;
    // Most constrained coordinate first, ties by index.
    std::size_t pick = n_;
    std::int64_t best = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const std::int64_t w = hi[j] - lo[j];
      if (w > 0 && (pick == n_ || w < best)) {
        pick = j;
        best = w;
      }
    }
    if (pick == n_) {
      // Fixed point; propagate() already checked every row at it.
      return true;
    }
    const std::int64_t mid = lo[pick] + (hi[pick] - lo[pick]) / 2;
    {
      IntPoint lo2 = lo;
      IntPoint hi2 = hi;
      hi2[pick] = mid;
      if (search(lo2, hi2)) {
        lo = std::move(lo2);
        return true;
      }
    }
    lo[pick] = mid + 1;
    return search(lo, hi);
  }

  const std::vector<T>& coef_;
  const std::vector<T>& rhs_;
  std::size_t n_;
  std::size_t m_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
};

RowSystem::RowSystem(const std::vector<RationalVector>& A,
                     const RationalVector& b, std::size_t n, const IntBox& box)
    : n_(n), column_sign_(n, 1) {
  if (A.size() != b.size()) {
    throw DimensionError("constraint matrix has " + std::to_string(A.size()) +
                         " rows but right-hand side has " +
                         std::to_string(b.size()));
  }
  std::vector<bool> has_pos(n, false);
  std::vector<bool> has_neg(n, false);
  coef_.reserve(A.size() * n);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != n) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(A[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    Integer scale = b[i].get_den();
    for (const auto& a : A[i]) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = A[i][j] * scale;
      coef_.push_back(scaled.get_num());
      if (A[i][j] > 0) has_pos[j] = true;
      if (A[i][j] < 0) has_neg[j] = true;
    }
    Rational r = b[i] * scale;
    rhs_.push_back(r.get_num());
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (has_pos[j] && has_neg[j]) {
      column_sign_[j] = 0;
      sign_separated_ = false;
    } else if (has_neg[j]) {
      column_sign_[j] = -1;
    }
  }

  narrow_ = true;
  for (const auto& c : coef_) narrow_ = narrow_ && narrow(c);
  for (const auto& r : rhs_) narrow_ = narrow_ && narrow(r);
  for (std::size_t j = 0; j < box.dim(); ++j) {
    narrow_ = narrow_ && std::llabs(box.lower(j)) < kNarrowLimit &&
              std::llabs(box.upper(j)) < kNarrowLimit;
  }
  if (narrow_) {
    coef128_.reserve(coef_.size());
    for (const auto& c : coef_) coef128_.push_back(to_i128(c));
    for (const auto& r : rhs_) rhs128_.push_back(to_i128(r));
  }
}

bool RowSystem::satisfied(const IntPoint& x) const {
  if (x.size() != n_) return false;
  if (narrow_) {
    for (std::size_t i = 0; i < rhs128_.size(); ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += coef128_[i * n_ + j] * x[j];
      if (s > rhs128_[i]) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] != 0) s += coef(i, j) * Integer(static_cast<long>(x[j]));
    }
    if (s > rhs_[i]) return false;
  }
  return true;
}

bool RowSystem::row_minima_feasible(const IntBox& sub) const {
  IntPoint corner(n_);
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    if (narrow_) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        const __int128 a = coef128_[i * n_ + j];
        s += a * (a > 0 ? sub.lower(j) : sub.upper(j));
      }
      if (s > rhs128_[i]) return false;
    } else {
      Integer s = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        const Integer& a = coef(i, j);
        s += a * Integer(static_cast<long>(a > 0 ? sub.lower(j) : sub.upper(j)));
      }
      if (s > rhs_[i]) return false;
    }
  }
  return true;
}

std::optional<IntPoint> RowSystem::find_point(const IntBox& sub,
                                              std::uint64_t node_cap) const {
  if (narrow_) {
    RowSearch<__int128> search(coef128_, rhs128_, n_, node_cap);
    return search.run(sub);
  }
  RowSearch<Integer> search(coef_, rhs_, n_, node_cap);
  return search.run(sub);
}

}  // namespace lexbound::detail
