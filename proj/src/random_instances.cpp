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

#include "lexbound/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lexbound::gen {

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Permutation permutation(Rng& rng, std::size_t n) {
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::shuffle(map.begin(), map.end(), rng.engine());
  return Permutation(std::move(map));
}

IntPoint point_in(Rng& rng, const IntBox& box) {
  IntPoint x(box.dim());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(box.lower(j), box.upper(j));
  return x;
}

IntBox box(Rng& rng, std::size_t n, std::int64_t umax) {
  IntPoint u(n);
  for (auto& v : u) v = rng.uniform(1, umax);
  return IntBox::from_upper(std::move(u));
}

RationalVector objective(Rng& rng, std::size_t n, bool nonnegative) {
  RationalVector c(n);
  for (auto& v : c) {
    v = static_cast<long>(rng.uniform(nonnegative ? 0 : -5, 5));
    if (rng.chance(0.15)) v /= 2;
  }
  return c;
}

SetInstance linear(Rng& rng, std::size_t n, std::int64_t umax, std::size_t rows) {
  IntBox b = box(rng, n, umax);
  const IntPoint x0 = point_in(rng, b);
  LinearSystem sys;
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector row(n);
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = static_cast<long>(rng.uniform(-4, 4));
      if (rng.chance(0.1)) row[j] /= 3;
      lhs += row[j] * Rational(static_cast<long>(x0[j]));
    }
    sys.A.push_back(std::move(row));
    sys.b.push_back(lhs + Rational(static_cast<long>(rng.uniform(0, 3))));
  }
  return SetInstance(std::move(b), std::move(sys));
}

SetInstance sign_separated(Rng& rng, std::size_t n, std::int64_t umax, std::size_t rows) {
  IntBox b = box(rng, n, umax);
  const IntPoint x0 = point_in(rng, b);
  std::vector<int> sign(n);
  for (auto& s : sign) s = rng.chance(0.7) ? 1 : -1;
  SignSeparated sys;
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector row(n);
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = static_cast<long>(sign[j] * rng.uniform(0, 5));
      lhs += row[j] * Rational(static_cast<long>(x0[j]));
    }
    sys.A.push_back(std::move(row));
    sys.b.push_back(lhs + Rational(static_cast<long>(rng.uniform(0, 6))));
  }
  SetInstance loose(std::move(b), std::move(sys));
  return loose.with_box(tighten_bounds(loose));
}

SetInstance knapsack(Rng& rng, std::size_t n, std::int64_t umax) {
  IntBox b = box(rng, n, umax);
  Knapsack k;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    k.a.push_back(rng.uniform(1, 20));
    total += k.a.back() * b.upper(j);
  }
  k.b = rng.uniform(0, total);
  return SetInstance(std::move(b), std::move(k), Monotonicity::down);
}

SetInstance graph(Rng& rng, std::size_t n, double p) {
  IndependenceGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(p)) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return SetInstance(IntBox::binary(n), std::move(g), Monotonicity::down);
}

namespace {

// Down-closure of `tops` inside [0, u].
std::vector<IntPoint> down_closure(const IntBox& b, const std::vector<IntPoint>& tops) {
  std::vector<IntPoint> out;
  for_each_point(b, [&](const IntPoint& x) {
    for (const auto& t : tops) {
      if (dominated_by(x, t)) {
        out.push_back(x);
        break;
      }
    }
    return true;
  });
  return out;
}

SetInstance packing_rows(Rng& rng, const IntBox& b) {
  const std::size_t n = b.dim();
  LinearSystem sys;
  const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 3));
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector row(n);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t a = rng.uniform(0, 6);
      row[j] = static_cast<long>(a);
      total += a * b.upper(j);
    }
    sys.A.push_back(std::move(row));
    sys.b.emplace_back(static_cast<long>(rng.uniform(0, std::max<std::int64_t>(total - 1, 0))));
  }
  return SetInstance(b, std::move(sys), Monotonicity::down);
}

}  // namespace

SetInstance packing(Rng& rng, std::size_t n, std::int64_t umax) {
  return packing_rows(rng, box(rng, n, umax));
}

SetInstance independence_system(Rng& rng, std::size_t n) {
  switch (rng.uniform(0, 3)) {
    case 0: return knapsack(rng, n, 1).with_box(IntBox::binary(n));
    case 1: return graph(rng, n, 0.1 + 0.5 * static_cast<double>(rng.uniform(0, 10)) / 10);
    case 2: return packing_rows(rng, IntBox::binary(n));
    default: {
      const IntBox b = IntBox::binary(n);
      std::vector<IntPoint> tops;
      const auto k = rng.uniform(1, 5);
      for (std::int64_t t = 0; t < k; ++t) tops.push_back(point_in(rng, b));
      return SetInstance(b, PointList{down_closure(b, tops)}, Monotonicity::down);
    }
  }
}

SetInstance binary_instance(Rng& rng, std::size_t n) {
  const IntBox b = IntBox::binary(n);
  switch (rng.uniform(0, 2)) {
    case 0: return independence_system(rng, n);
    case 1: {
      // Up-closure of a few random points.
      std::vector<IntPoint> bottoms;
      const auto k = rng.uniform(1, 4);
      for (std::int64_t t = 0; t < k; ++t) bottoms.push_back(point_in(rng, b));
      std::vector<IntPoint> pts;
      for_each_point(b, [&](const IntPoint& x) {
        for (const auto& t : bottoms) {
          if (dominated_by(t, x)) {
            pts.push_back(x);
            break;
          }
        }
        return true;
      });
      return SetInstance(b, PointList{std::move(pts)}, Monotonicity::up);
    }
    default: return point_cloud(rng, n, 1);
  }
}

SetInstance down_integer(Rng& rng, std::size_t n, std::int64_t umax) {
  const IntBox b = box(rng, n, umax);
  if (rng.chance(0.5)) return packing_rows(rng, b);
  std::vector<IntPoint> tops;
  const auto k = rng.uniform(1, 6);
  for (std::int64_t t = 0; t < k; ++t) tops.push_back(point_in(rng, b));
  return SetInstance(b, PointList{down_closure(b, tops)}, Monotonicity::down);
}

SetInstance point_cloud(Rng& rng, std::size_t n, std::int64_t umax) {
  const IntBox b = box(rng, n, umax);
  std::vector<IntPoint> pts;
  const double p = 0.1 + 0.4 * static_cast<double>(rng.uniform(0, 10)) / 10;
  for_each_point(b, [&](const IntPoint& x) {
    if (rng.chance(p)) pts.push_back(x);
    return true;
  });
  if (pts.empty()) pts.push_back(point_in(rng, b));
  return SetInstance(b, PointList{std::move(pts)});
}

SubmodularOracle concave_submodular(Rng& rng, std::size_t n, std::int64_t wmax) {
  std::vector<std::int64_t> w(n);
  std::int64_t total = 0;
  for (auto& v : w) {
    v = rng.uniform(0, wmax);
    total += v;
  }
  std::vector<std::int64_t> g(static_cast<std::size_t>(total) + 1, 0);
  std::int64_t step = rng.uniform(1, 4);
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (rng.chance(0.3) && step > 0) --step;
    g[k] = g[k - 1] + step;
  }
  return SubmodularOracle::concave_of_modular(std::move(w), std::move(g));
}

SubmodularOracle coverage_submodular(Rng& rng, std::size_t n) {
  const std::size_t blocks = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<std::uint64_t> masks(blocks);
  std::vector<std::int64_t> caps(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(0.6)) masks[k] |= 1ULL << i;
    }
    caps[k] = rng.uniform(1, 3);
  }
  std::vector<std::int64_t> values(1ULL << n);
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    for (std::size_t k = 0; k < blocks; ++k) {
      values[s] += std::min<std::int64_t>(std::popcount(s & masks[k]), caps[k]);
    }
  }
  return SubmodularOracle::truth_table(std::move(values));
}

LexConstraint lex_constraint(Rng& rng, const IntBox& b) {
  return {rng.chance(0.5) ? LexDirection::at_most : LexDirection::at_least,
          permutation(rng, b.dim()), point_in(rng, b)};
}

}  // namespace lexbound::gen
