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

#include "lexbound/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lexbound/errors.hpp"

namespace lexbound {

Permutation::Permutation(std::vector<int> positions_to_coords)
    : map_(std::move(positions_to_coords)), inverse_(map_.size(), -1) {
  const int n = static_cast<int>(map_.size());
  for (int p = 0; p < n; ++p) {
    const int c = map_[p];
    if (c < 0 || c >= n || inverse_[c] != -1) {
      throw DomainError("permutation is not a bijection on 1.." +
                        std::to_string(n));
    }
    inverse_[c] = p;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::reverse(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t p = 0; p < n; ++p) m[p] = static_cast<int>(n - 1 - p);
  return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<int> m;
  m.reserve(images.size());
  for (auto v : images) {
    if (v < 1 || v > static_cast<std::int64_t>(images.size())) {
      throw DomainError("permutation entry " + std::to_string(v) +
                        " outside 1.." + std::to_string(images.size()));
    }
    m.push_back(static_cast<int>(v - 1));
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

IntPoint Permutation::act(const IntPoint& x) const {
  if (x.size() != map_.size()) throw DimensionError("permutation/point size");
  IntPoint out(x.size());
  for (std::size_t p = 0; p < map_.size(); ++p) out[p] = x[map_[p]];
  return out;
}

IntPoint Permutation::unact(const IntPoint& permuted) const {
  if (permuted.size() != map_.size()) {
    throw DimensionError("permutation/point size");
  }
  IntPoint out(permuted.size());
  for (std::size_t p = 0; p < map_.size(); ++p) out[map_[p]] = permuted[p];
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("permutation sizes differ");
  std::vector<int> m(size());
  for (std::size_t p = 0; p < size(); ++p) m[p] = map_[other.map_[p]];
  return Permutation(std::move(m));
}

std::vector<std::int64_t> Permutation::to_one_based() const {
  std::vector<std::int64_t> out;
  out.reserve(map_.size());
  for (int c : map_) out.push_back(c + 1);
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < map_.size(); ++p) {
    if (p) s += ',';
    s += std::to_string(map_[p] + 1);
  }
  return s;
}

IntBox::IntBox(IntPoint lower, IntPoint upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw DimensionError("box lower/upper have different dimensions");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] > upper_[i]) {
      throw DomainError("box has lower > upper at coordinate " +
                        std::to_string(i + 1));
    }
  }
}

IntBox IntBox::from_upper(IntPoint upper) {
  IntPoint lower(upper.size(), 0);
  return IntBox(std::move(lower), std::move(upper));
}

IntBox IntBox::binary(std::size_t n) {
  return IntBox(IntPoint(n, 0), IntPoint(n, 1));
}

Integer IntBox::point_count() const {
  Integer count = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    count *= Integer(static_cast<long>(width(i)));
  }
  return count;
}

std::optional<std::uint64_t> IntBox::point_count_if_at_most(
    std::uint64_t cap) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto w = static_cast<std::uint64_t>(width(i));
    if (count > cap / w) return std::nullopt;
    count *= w;
  }
  if (count > cap) return std::nullopt;
  return count;
}

bool IntBox::contains(const IntPoint& x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  }
  return true;
}

bool IntBox::contains(const IntBox& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (other.lower_[i] < lower_[i] || other.upper_[i] > upper_[i]) {
      return false;
    }
  }
  return true;
}

bool IntBox::is_singleton() const { return lower_ == upper_; }

bool IntBox::is_binary() const {
  return std::all_of(lower_.begin(), lower_.end(),
                     [](auto v) { return v == 0; }) &&
         std::all_of(upper_.begin(), upper_.end(),
                     [](auto v) { return v == 1; });
}

bool IntBox::lower_is_zero() const {
  return std::all_of(lower_.begin(), lower_.end(),
                     [](auto v) { return v == 0; });
}

std::optional<IntBox> IntBox::restrict(std::size_t i, std::int64_t lo,
                                       std::int64_t hi) const {
  lo = std::max(lo, lower_[i]);
  hi = std::min(hi, upper_[i]);
  if (lo > hi) return std::nullopt;
  IntBox out = *this;
  out.lower_[i] = lo;
  out.upper_[i] = hi;
  return out;
}

IntBox IntBox::fix(std::size_t i, std::int64_t value) const {
  IntBox out = *this;
  out.lower_[i] = value;
  out.upper_[i] = value;
  return out;
}

std::optional<IntBox> IntBox::intersect(const IntBox& other) const {
  if (other.dim() != dim()) throw DimensionError("box dimensions differ");
  IntBox out = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    out.lower_[i] = std::max(lower_[i], other.lower_[i]);
    out.upper_[i] = std::min(upper_[i], other.upper_[i]);
    if (out.lower_[i] > out.upper_[i]) return std::nullopt;
  }
  return out;
}

std::strong_ordering lex_compare(const IntPoint& x, const IntPoint& y,
                                 const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("lex comparison needs points of the permutation's size");
  }
  for (std::size_t p = n; p-- > 0;) {
    const int c = sigma.at(p);
    if (x[c] != y[c]) return x[c] <=> y[c];
  }
  return std::strong_ordering::equal;
}

bool lex_le(const IntPoint& x, const IntPoint& y, const Permutation& sigma) {
  return lex_compare(x, y, sigma) != std::strong_ordering::greater;
}

BigWeights superincreasing_weights(const IntBox& box,
                                   const Permutation& sigma) {
  if (box.dim() != sigma.size()) throw DimensionError("box/permutation size");
  if (!box.lower_is_zero()) {
    throw DomainError("superincreasing weights need a box with lower bound 0");
  }
  BigWeights lambda(box.dim());
  Integer prefix = 0;  // sum_{q<p} lambda[sigma(q)] * u[sigma(q)]
  for (std::size_t p = 0; p < box.dim(); ++p) {
    const int c = sigma.at(p);
    lambda[c] = 1 + prefix;
    prefix += lambda[c] * Integer(static_cast<long>(box.upper(c)));
  }
  return lambda;
}

Integer weighted_sum(const BigWeights& lambda, const IntPoint& x) {
  if (lambda.size() != x.size()) throw DimensionError("weights/point size");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += lambda[i] * Integer(static_cast<long>(x[i]));
  }
  return s;
}

Permutation monotone_permutation(const IntPoint& x) {
  std::vector<int> zeros;
  std::vector<int> ones;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      zeros.push_back(static_cast<int>(i));
    } else if (x[i] == 1) {
      ones.push_back(static_cast<int>(i));
    } else {
      throw DomainError("monotone permutation needs a 0/1 point, got " +
                        to_string(x));
    }
  }
  zeros.insert(zeros.end(), ones.begin(), ones.end());
  return Permutation(std::move(zeros));
}

IntPoint complement_point(const IntPoint& x, const IntBox& box) {
  if (!box.contains(x)) {
    throw DomainError("point " + to_string(x) + " lies outside the box");
  }
  IntPoint out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = box.upper(i) - x[i] + box.lower(i);
  }
  return out;
}

bool dominated_by(const IntPoint& x, const IntPoint& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

Rational dot(const RationalVector& c, const IntPoint& x) {
  if (c.size() != x.size()) throw DimensionError("objective/point size");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) s += c[i] * Rational(static_cast<long>(x[i]));
  }
  return s;
}

std::string to_string(const IntPoint& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

void for_each_point(const IntBox& box,
                    const std::function<bool(const IntPoint&)>& visit) {
  const std::size_t n = box.dim();
  IntPoint x = box.lower();
  while (true) {
    if (!visit(x)) return;
    std::size_t j = n;
    while (true) {
      if (j == 0) return;
      --j;
      if (x[j] < box.upper(j)) {
        ++x[j];
        break;
      }
      x[j] = box.lower(j);
    }
  }
}

}  // namespace lexbound
