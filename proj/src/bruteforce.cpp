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

#include "lexbound/bruteforce.hpp"

#include <algorithm>
#include <string>

#include "lexbound/errors.hpp"

namespace lexbound::oracle {
namespace {

bool rows_hold(const std::vector<RationalVector>& A, const RationalVector& b,
               const IntPoint& x) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      s += A[i][j] * Rational(static_cast<long>(x[j]));
    }
    if (s > b[i]) return false;
  }
  return true;
}

bool dominates(const IntPoint& y, const IntPoint& x) {
  // y >= x componentwise and y != x
  bool strict = false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (y[j] < x[j]) return false;
    if (y[j] > x[j]) strict = true;
  }
  return strict;
}

}  // namespace

bool member(const SetInstance& inst, const IntPoint& x) {
  const IntBox& box = inst.box();
  if (x.size() != box.dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < box.lower(j) || x[j] > box.upper(j)) return false;
  }
  return std::visit(
      [&](const auto& body) -> bool {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LinearSystem> ||
                      std::is_same_v<T, SignSeparated>) {
          return rows_hold(body.A, body.b, x);
        } else if constexpr (std::is_same_v<T, Knapsack>) {
          __int128 s = 0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            s += static_cast<__int128>(body.a[j]) * x[j];
          }
          return s <= body.b;
        } else if constexpr (std::is_same_v<T, IndependenceGraph>) {
          for (auto [i, j] : body.edges) {
            if (x[i] + x[j] > 1) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, SubmodularOracle>) {
          const std::size_t n = x.size();
          for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (mask >> i & 1ULL) s += x[i];
            }
            if (s > body(mask)) return false;
          }
          return std::all_of(x.begin(), x.end(), [](auto v) { return v >= 0; });
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          return hull_member(body.generators, to_rational(x));
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          for (const auto& c : body.constraints) {
            const bool ok = c.direction == LexDirection::at_most
                                ? lex_le(x, c.threshold, c.sigma)
                                : lex_le(c.threshold, x, c.sigma);
            if (!ok) return false;
          }
          return true;
        } else {
          static_assert(std::is_same_v<T, PointList>);
          return std::find(body.points.begin(), body.points.end(), x) !=
                 body.points.end();
        }
      },
      inst.body());
}

std::vector<IntPoint> box_points(const IntBox& box, std::uint64_t cap) {
  if (!box.point_count_if_at_most(cap)) {
    throw ResourceError("box has more than " + std::to_string(cap) +
                        " points; too large to enumerate");
  }
  std::vector<IntPoint> out;
  const std::size_t n = box.dim();
  IntPoint x = box.lower();
  while (true) {
    out.push_back(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < box.upper(j)) {
        ++x[j];
        break;
      }
      x[j] = box.lower(j);
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<IntPoint> enumerate(const SetInstance& inst, const IntBox& sub,
                                std::uint64_t cap) {
  if (sub.dim() != inst.dim()) throw DimensionError("sub-box dimension mismatch");
  std::vector<IntPoint> out;
  for (auto& x : box_points(sub, cap)) {
    if (member(inst, x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<IntPoint> enumerate(const SetInstance& inst, std::uint64_t cap) {
  return enumerate(inst, inst.box(), cap);
}

IntPoint lex_opt(std::span<const IntPoint> points, const Permutation& sigma,
                 Direction dir) {
  if (points.empty()) throw InfeasibleError("lex optimum of an empty list");
  const IntPoint* best = &points[0];
  for (const auto& p : points) {
    if (dir == Direction::max ? lex_le(*best, p, sigma) : lex_le(p, *best, sigma)) {
      best = &p;
    }
  }
  return *best;
}

std::vector<IntPoint> maximal(std::span<const IntPoint> points) {
  std::vector<IntPoint> out;
  for (const auto& x : points) {
    const bool beaten = std::any_of(points.begin(), points.end(),
                                    [&](const IntPoint& y) { return dominates(y, x); });
    if (!beaten) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntPoint> minimal(std::span<const IntPoint> points) {
  std::vector<IntPoint> out;
  for (const auto& x : points) {
    const bool beaten = std::any_of(points.begin(), points.end(),
                                    [&](const IntPoint& y) { return dominates(x, y); });
    if (!beaten) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OptimumResult optimum(std::span<const IntPoint> points, const RationalVector& c) {
  if (points.empty()) throw InfeasibleError("optimum over an empty list");
  OptimumResult r;
  bool first = true;
  for (const auto& x : points) {
    if (c.size() != x.size()) throw DimensionError("objective dimension mismatch");
    Rational v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += c[j] * Rational(static_cast<long>(x[j]));
    if (first || v > r.value) {
      r.value = v;
      r.argmax.clear();
      first = false;
    }
    if (v == r.value) r.argmax.push_back(x);
  }
  return r;
}

std::vector<IntPoint> lexset_intersection(const IntBox& box,
                                          std::span<const LexConstraint> constraints,
                                          std::uint64_t cap) {
  std::vector<IntPoint> out;
  for (auto& x : box_points(box, cap)) {
    bool ok = true;
    for (const auto& c : constraints) {
      ok = c.direction == LexDirection::at_most ? lex_le(x, c.threshold, c.sigma)
                                                : lex_le(c.threshold, x, c.sigma);
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

std::vector<IntPoint> minimal_infeasible(const SetInstance& inst) {
  if (!inst.box().is_binary()) {
    throw DomainError("minimal infeasible points need the box [0,1]^n");
  }
  std::vector<IntPoint> infeasible;
  for (auto& x : box_points(inst.box())) {
    if (!member(inst, x)) infeasible.push_back(std::move(x));
  }
  return minimal(infeasible);
}

}  // namespace lexbound::oracle
