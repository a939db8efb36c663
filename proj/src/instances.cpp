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

#include "lexbound/instances.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "lexbound/errors.hpp"
#include "lexbound/exact_lp.hpp"
#include "lexbound/lexsets.hpp"
#include "lexbound/row_system.hpp"

namespace lexbound {

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::down: return "down";
    case Monotonicity::up: return "up";
    case Monotonicity::none: return "none";
    case Monotonicity::unknown: return "unknown";
  }
  return "unknown";
}

Monotonicity monotonicity_from_string(std::string_view s) {
  if (s == "down") return Monotonicity::down;
  if (s == "up") return Monotonicity::up;
  if (s == "none") return Monotonicity::none;
  if (s == "unknown") return Monotonicity::unknown;
  throw DomainError("unknown monotonicity tag '" + std::string(s) + "'");
}

SolverOptions options_from_environment() {
  SolverOptions options;
  if (const char* env = std::getenv("LEXBOUND_NODE_CAP")) {
    std::uint64_t cap = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec != std::errc() || ptr != end || cap == 0) {
      throw DomainError("LEXBOUND_NODE_CAP must be a positive integer, got '" +
                        std::string(env) + "'");
    }
    options.node_cap = cap;
  }
  return options;
}

// ---------------------------------------------------------------------------
// SubmodularOracle

SubmodularOracle SubmodularOracle::truth_table(std::vector<std::int64_t> values) {
  if (values.empty() || !std::has_single_bit(values.size())) {
    throw DomainError("truth table size must be a power of two");
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(values.size()));
  if (n > kMaxTruthTableElements) {
    throw ResourceError("truth tables are limited to " +
                        std::to_string(kMaxTruthTableElements) + " elements");
  }
  if (values[0] != 0) throw DomainError("submodular function needs f(empty) = 0");

  SubmodularOracle f;
  f.kind_ = Kind::truth_table;
  f.n_ = n;
  f.values_ = std::move(values);
  f.validated_ = n <= kMaxValidatedElements;
  if (!f.validated_) return f;

  // Nondecreasing and diminishing returns on adjacent pairs; together these
  // are equivalent to monotone submodularity.
  const std::uint64_t full = 1ULL << n;
  for (std::uint64_t s = 0; s < full; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bi = 1ULL << i;
      if (s & bi) continue;
      const std::int64_t gain_i = f.values_[s | bi] - f.values_[s];
      if (gain_i < 0) {
        throw DomainError("submodular function is not nondecreasing at mask " +
                          std::to_string(s | bi));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint64_t bj = 1ULL << j;
        if (s & bj) continue;
        const std::int64_t gain_after = f.values_[s | bi | bj] - f.values_[s | bj];
        if (gain_after > gain_i) {
          throw DomainError("function is not submodular at mask " +
                            std::to_string(s) + " with elements " +
                            std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      }
    }
  }
  return f;
}

SubmodularOracle SubmodularOracle::concave_of_modular(
    std::vector<std::int64_t> weights, std::vector<std::int64_t> g) {
  if (weights.size() > kMaxElements) {
    throw ResourceError("submodular oracles are limited to " +
                        std::to_string(kMaxElements) + " elements");
  }
  std::int64_t total = 0;
  for (auto w : weights) {
    if (w < 0) throw DomainError("concave-of-modular weights must be >= 0");
    total += w;
  }
  if (g.size() < static_cast<std::size_t>(total) + 1) {
    throw DomainError("g needs " + std::to_string(total + 1) +
                      " entries, got " + std::to_string(g.size()));
  }
  if (g[0] != 0) throw DomainError("g(0) must be 0");
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (g[k] < g[k - 1]) throw DomainError("g must be nondecreasing");
    if (k >= 2 && g[k] - g[k - 1] > g[k - 1] - g[k - 2]) {
      throw DomainError("g must be concave");
    }
  }
  SubmodularOracle f;
  f.kind_ = Kind::concave_of_modular;
  f.n_ = weights.size();
  f.weights_ = std::move(weights);
  f.g_ = std::move(g);
  return f;
}

std::int64_t SubmodularOracle::operator()(std::uint64_t mask) const {
  if (kind_ == Kind::truth_table) return values_[mask];
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (mask >> i & 1ULL) s += weights_[i];
  }
  return g_[static_cast<std::size_t>(s)];
}

bool LexConstraint::satisfied_by(const IntPoint& x) const {
  return direction == LexDirection::at_most ? lex_le(x, threshold, sigma)
                                            : lex_le(threshold, x, sigma);
}

// ---------------------------------------------------------------------------
// SetInstance

namespace {

constexpr std::size_t kMaxHullGenerators = 64;
constexpr std::size_t kMaxHullDim = 10;

void check_hull_scale(std::size_t generators, std::size_t n) {
  if (generators > kMaxHullGenerators || n > kMaxHullDim) {
    throw ResourceError("hull membership is limited to " +
                        std::to_string(kMaxHullGenerators) +
                        " generators in dimension " + std::to_string(kMaxHullDim));
  }
}

std::vector<RationalVector> knapsack_rows(const Knapsack& k,
                                          RationalVector& b) {
  RationalVector row;
  row.reserve(k.a.size());
  for (auto v : k.a) row.emplace_back(static_cast<long>(v));
  b = {Rational(static_cast<long>(k.b))};
  return {row};
}

std::vector<RationalVector> graph_rows(const IndependenceGraph& g,
                                       std::size_t n, RationalVector& b) {
  std::vector<RationalVector> A;
  for (auto [i, j] : g.edges) {
    RationalVector row(n, Rational(0));
    row[i] = 1;
    row[j] = 1;
    A.push_back(std::move(row));
    b.emplace_back(1);
  }
  return A;
}

// Membership bitmap over a small box, coordinate 0 least significant.
std::vector<char> membership_table(const SetInstance& inst) {
  const IntBox& box = inst.box();
  const std::size_t n = box.dim();
  std::vector<char> table;
  IntPoint x = box.lower();
  while (true) {
    table.push_back(contains(inst, x) ? 1 : 0);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (x[j] < box.upper(j)) {
        ++x[j];
        break;
      }
      x[j] = box.lower(j);
    }
    if (j == n) break;
  }
  return table;
}

}  // namespace

SetInstance::SetInstance(IntBox box, Body body, Monotonicity declared)
    : box_(std::move(box)), body_(std::move(body)), declared_(declared) {
  validate_body();
  resolve_monotonicity();
}

std::string_view SetInstance::body_type() const {
  static constexpr std::string_view kNames[] = {
      "linear",     "sign_separated", "knapsack",     "indep_graph",
      "submodular", "vpolytope",      "lex_explicit", "point_list"};
  return kNames[body_.index()];
}

SetInstance SetInstance::with_box(IntBox box) const {
  return SetInstance(std::move(box), body_, declared_);
}

bool SetInstance::has_sign_separated_rows() const {
  return rows_ && rows_->sign_separated();
}

void SetInstance::validate_body() {
  const std::size_t n = box_.dim();
  if (n == 0) throw DimensionError("instances need dimension n >= 1");

  auto check_point = [&](const IntPoint& p, const std::string& what) {
    if (p.size() != n) {
      throw DimensionError(what + " has " + std::to_string(p.size()) +
                           " coordinates, expected " + std::to_string(n));
    }
    if (!box_.contains(p)) throw DomainError(what + " lies outside the box");
  };

  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LinearSystem>) {
          rows_ = std::make_shared<detail::RowSystem>(body.A, body.b, n, box_);
        } else if constexpr (std::is_same_v<T, SignSeparated>) {
          rows_ = std::make_shared<detail::RowSystem>(body.A, body.b, n, box_);
          for (std::size_t j = 0; j < n; ++j) {
            if (rows_->column_sign(j) == 0) {
              throw DomainError("column " + std::to_string(j + 1) +
                                " mixes positive and negative entries");
            }
          }
        } else if constexpr (std::is_same_v<T, Knapsack>) {
          if (body.a.size() != n) {
            throw DimensionError("knapsack has " + std::to_string(body.a.size()) +
                                 " weights, expected " + std::to_string(n));
          }
          RationalVector b;
          auto A = knapsack_rows(body, b);
          rows_ = std::make_shared<detail::RowSystem>(A, b, n, box_);
        } else if constexpr (std::is_same_v<T, IndependenceGraph>) {
          if (!box_.is_binary()) {
            throw DomainError("independence graph instances need box [0,1]^n");
          }
          for (auto [i, j] : body.edges) {
            if (i < 0 || j < 0 || i >= static_cast<int>(n) ||
                j >= static_cast<int>(n) || i == j) {
              throw DomainError("edge (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") is invalid");
            }
          }
          RationalVector b;
          auto A = graph_rows(body, n, b);
          rows_ = std::make_shared<detail::RowSystem>(A, b, n, box_);
        } else if constexpr (std::is_same_v<T, SubmodularOracle>) {
          if (body.size() != n) {
            throw DimensionError("submodular oracle has " +
                                 std::to_string(body.size()) +
                                 " elements, expected " + std::to_string(n));
          }
          if (!box_.lower_is_zero()) {
            throw DomainError("polymatroid instances need lower bounds 0");
          }
          if (!body.validated()) {
            warnings_.push_back(
                "truth table too large to validate submodularity; accepted "
                "unvalidated");
          }
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          if (body.generators.empty()) {
            throw DomainError("vpolytope needs at least one generator");
          }
          check_hull_scale(body.generators.size(), n);
          for (std::size_t g = 0; g < body.generators.size(); ++g) {
            if (body.generators[g].size() != n) {
              throw DimensionError("generator " + std::to_string(g + 1) +
                                   " has wrong dimension");
            }
          }
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          for (std::size_t k = 0; k < body.constraints.size(); ++k) {
            const auto& c = body.constraints[k];
            if (c.sigma.size() != n) {
              throw DimensionError("constraint " + std::to_string(k + 1) +
                                   " permutation has wrong dimension");
            }
            check_point(c.threshold, "threshold of constraint " +
                                         std::to_string(k + 1));
          }
        } else if constexpr (std::is_same_v<T, PointList>) {
          for (std::size_t k = 0; k < body.points.size(); ++k) {
            check_point(body.points[k], "point " + std::to_string(k + 1));
          }
          auto sorted = std::make_shared<std::vector<IntPoint>>(body.points);
          std::sort(sorted->begin(), sorted->end());
          sorted->erase(std::unique(sorted->begin(), sorted->end()),
                        sorted->end());
          sorted_points_ = std::move(sorted);
        }
      },
      body_);
}

void SetInstance::resolve_monotonicity() {
  // Structural knowledge first: rows with one column sign throughout are
  // closed in the matching direction inside the box.
  Monotonicity structural = Monotonicity::unknown;
  if (rows_) {
    bool all_pos = true;
    bool all_neg = true;
    for (std::size_t j = 0; j < dim(); ++j) {
      all_pos = all_pos && rows_->column_sign(j) == 1;
      all_neg = all_neg && rows_->column_sign(j) == -1;
    }
    if (all_pos) {
      structural = Monotonicity::down;
    } else if (all_neg) {
      structural = Monotonicity::up;
    }
  } else if (std::holds_alternative<SubmodularOracle>(body_)) {
    structural = Monotonicity::down;
  }

  const auto count = box_.point_count_if_at_most(kMonotonicityCheckCap);
  if (!count) {
    resolved_ = declared_ == Monotonicity::unknown ? structural : declared_;
    return;
  }

  const std::vector<char> table = membership_table(*this);
  const std::size_t n = dim();
  std::vector<std::uint64_t> stride(n, 1);
  for (std::size_t j = 1; j < n; ++j) {
    stride[j] = stride[j - 1] * static_cast<std::uint64_t>(box_.width(j - 1));
  }
  bool down = true;
  bool up = true;
  IntPoint x = box_.lower();
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx]) {
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] > box_.lower(j) && !table[idx - stride[j]]) down = false;
        if (x[j] < box_.upper(j) && !table[idx + stride[j]]) up = false;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < box_.upper(j)) {
        ++x[j];
        break;
      }
      x[j] = box_.lower(j);
    }
  }

  switch (declared_) {
    case Monotonicity::down:
      if (!down) throw DomainError("instance is tagged down but is not down-closed");
      resolved_ = Monotonicity::down;
      break;
    case Monotonicity::up:
      if (!up) throw DomainError("instance is tagged up but is not up-closed");
      resolved_ = Monotonicity::up;
      break;
    case Monotonicity::none:
      resolved_ = Monotonicity::none;
      break;
    case Monotonicity::unknown:
      resolved_ = down ? Monotonicity::down
                       : (up ? Monotonicity::up : Monotonicity::none);
      break;
  }
}

// ---------------------------------------------------------------------------
// Membership and feasibility

RationalVector to_rational(const IntPoint& x) {
  RationalVector r;
  r.reserve(x.size());
  for (auto v : x) r.emplace_back(static_cast<long>(v));
  return r;
}

bool hull_member(const std::vector<RationalVector>& generators,
                 const RationalVector& x) {
  check_hull_scale(generators.size(), x.size());
  for (const auto& g : generators) {
    if (g.size() != x.size()) {
      throw DimensionError("generator and point dimensions differ");
    }
  }
  if (generators.empty()) return false;
  return lp::hull_point_in_box(generators, x, x).has_value();
}

namespace {

bool polymatroid_contains(const SubmodularOracle& f, const IntPoint& x) {
  const std::size_t n = f.size();
  for (auto v : x) {
    if (v < 0) return false;
  }
  // Gray-code walk: one element enters or leaves per step.
  std::int64_t sum = 0;
  std::uint64_t mask = 0;
  const std::uint64_t steps = 1ULL << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int bit = std::countr_zero(k);
    mask ^= 1ULL << bit;
    sum += (mask >> bit & 1ULL) ? x[bit] : -x[bit];
    if (sum > f(mask)) return false;
  }
  return true;
}

bool vpolytope_feasible(const VPolytope& body, const IntBox& sub,
                        std::uint64_t node_cap) {
  std::vector<IntBox> stack{sub};
  std::uint64_t nodes = 0;
  while (!stack.empty()) {
    IntBox box = std::move(stack.back());
    stack.pop_back();
    if (++nodes > node_cap) {
      throw ResourceError("vpolytope branch and bound exceeded " +
                          std::to_string(node_cap) + " nodes");
    }
    auto pt = lp::hull_point_in_box(body.generators, to_rational(box.lower()),
                                    to_rational(box.upper()));
    if (!pt) continue;
    std::size_t j = 0;
    while (j < pt->size() && (*pt)[j].get_den() == 1) ++j;
    if (j == pt->size()) return true;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), (*pt)[j].get_num_mpz_t(), (*pt)[j].get_den_mpz_t());
    const std::int64_t f = fl.get_si();
    // Upper branch pushed first so the lower one is explored first.
    if (auto hi = box.restrict(j, f + 1, box.upper(j))) stack.push_back(*hi);
    if (auto lo = box.restrict(j, box.lower(j), f)) stack.push_back(*lo);
  }
  return false;
}

}  // namespace

bool contains(const SetInstance& inst, const IntPoint& x) {
  if (x.size() != inst.dim() || !inst.box().contains(x)) return false;
  if (const auto* rows = inst.rows()) return rows->satisfied(x);
  return std::visit(
      [&](const auto& body) -> bool {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, SubmodularOracle>) {
          return polymatroid_contains(body, x);
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          return hull_member(body.generators, to_rational(x));
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          return std::all_of(body.constraints.begin(), body.constraints.end(),
                             [&](const LexConstraint& c) { return c.satisfied_by(x); });
        } else if constexpr (std::is_same_v<T, PointList>) {
          const auto* sorted = inst.sorted_points();
          return std::binary_search(sorted->begin(), sorted->end(), x);
        } else {
          return false;  // row-backed bodies handled above
        }
      },
      inst.body());
}

bool is_int_feasible(const SetInstance& inst, const IntBox& sub,
                     const SolverOptions& options) {
  if (sub.dim() != inst.dim()) {
    throw DimensionError("sub-box has dimension " + std::to_string(sub.dim()) +
                         ", instance has " + std::to_string(inst.dim()));
  }
  if (!inst.box().contains(sub)) {
    throw DimensionError("sub-box is not contained in the instance box");
  }
  switch (inst.monotonicity()) {
    case Monotonicity::down: return contains(inst, sub.lower());
    case Monotonicity::up: return contains(inst, sub.upper());
    default: break;
  }
  if (const auto* rows = inst.rows()) {
    if (rows->sign_separated()) return rows->row_minima_feasible(sub);
    return rows->find_point(sub, options.node_cap).has_value();
  }
  return std::visit(
      [&](const auto& body) -> bool {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, SubmodularOracle>) {
          return polymatroid_contains(body, sub.lower());
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          return vpolytope_feasible(body, sub, options.node_cap);
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          bool found = false;
          for_each_fixing_cell(
              sub, body.constraints,
              [&](const IntBox&) {
                found = true;
                return false;
              },
              options.node_cap);
          return found;
        } else if constexpr (std::is_same_v<T, PointList>) {
          return std::any_of(body.points.begin(), body.points.end(),
                             [&](const IntPoint& p) { return sub.contains(p); });
        } else {
          return false;
        }
      },
      inst.body());
}

IntBox tighten_bounds(const SetInstance& inst, const SolverOptions& options) {
  const IntBox& box = inst.box();
  if (!is_int_feasible(inst, box, options)) {
    throw InfeasibleError("instance has no integer points");
  }
  IntPoint lower = box.lower();
  IntPoint upper = box.upper();
  for (std::size_t j = 0; j < box.dim(); ++j) {
    std::int64_t lo = box.lower(j);
    std::int64_t hi = box.upper(j);
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (is_int_feasible(inst, *box.restrict(j, mid, box.upper(j)), options)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    upper[j] = lo;
    lo = box.lower(j);
    hi = upper[j];
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (is_int_feasible(inst, *box.restrict(j, box.lower(j), mid), options)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    lower[j] = lo;
  }
  return IntBox(std::move(lower), std::move(upper));
}

// ---------------------------------------------------------------------------
// Complement and constructors

namespace {

Monotonicity flipped(Monotonicity m) {
  if (m == Monotonicity::down) return Monotonicity::up;
  if (m == Monotonicity::up) return Monotonicity::down;
  return m;
}

// A (u + l - y) <= b  becomes  (-A) y <= b - A (u + l).
void complement_rows(const std::vector<RationalVector>& A,
                     const RationalVector& b, const IntBox& box,
                     std::vector<RationalVector>& A2, RationalVector& b2) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    RationalVector row(A[i].size());
    Rational shift = 0;
    for (std::size_t j = 0; j < A[i].size(); ++j) {
      row[j] = -A[i][j];
      shift += A[i][j] * Rational(static_cast<long>(box.lower(j) + box.upper(j)));
    }
    A2.push_back(std::move(row));
    b2.push_back(b[i] - shift);
  }
}

}  // namespace

std::optional<SetInstance> complement_instance(const SetInstance& inst) {
  const IntBox& box = inst.box();
  const std::size_t n = inst.dim();
  const Monotonicity tag = flipped(inst.declared_monotonicity());
  auto reflect = [&](const IntPoint& x) {
    IntPoint y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = box.lower(j) + box.upper(j) - x[j];
    return y;
  };

  return std::visit(
      [&](const auto& body) -> std::optional<SetInstance> {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LinearSystem> ||
                      std::is_same_v<T, SignSeparated>) {
          T out;
          complement_rows(body.A, body.b, box, out.A, out.b);
          return SetInstance(box, out, tag);
        } else if constexpr (std::is_same_v<T, Knapsack>) {
          Knapsack out;
          out.b = body.b;
          for (std::size_t j = 0; j < n; ++j) {
            out.a.push_back(-body.a[j]);
            out.b -= body.a[j] * (box.lower(j) + box.upper(j));
          }
          return SetInstance(box, out, tag);
        } else if constexpr (std::is_same_v<T, IndependenceGraph>) {
          RationalVector b;
          auto A = graph_rows(body, n, b);
          LinearSystem out;
          complement_rows(A, b, box, out.A, out.b);
          return SetInstance(box, out, tag);
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          VPolytope out;
          for (const auto& g : body.generators) {
            RationalVector h(n);
            for (std::size_t j = 0; j < n; ++j) {
              h[j] = Rational(static_cast<long>(box.lower(j) + box.upper(j))) - g[j];
            }
            out.generators.push_back(std::move(h));
          }
          return SetInstance(box, out, tag);
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          ExplicitLexSet out;
          for (const auto& c : body.constraints) {
            out.constraints.push_back(
                {c.direction == LexDirection::at_most ? LexDirection::at_least
                                                      : LexDirection::at_most,
                 c.sigma, reflect(c.threshold)});
          }
          return SetInstance(box, out, tag);
        } else if constexpr (std::is_same_v<T, PointList>) {
          PointList out;
          for (const auto& p : body.points) out.points.push_back(reflect(p));
          return SetInstance(box, out, tag);
        } else {
          return std::nullopt;
        }
      },
      inst.body());
}

SetInstance polymatroid_instance(const SubmodularOracle& f) {
  IntPoint upper(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) upper[i] = f.singleton(i);
  return SetInstance(IntBox::from_upper(std::move(upper)), f, Monotonicity::down);
}

SetInstance polymatroid_linear_system(const SubmodularOracle& f) {
  const std::size_t n = f.size();
  if (n > 10) {
    throw ResourceError("explicit polymatroid systems are limited to n <= 10");
  }
  LinearSystem sys;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    RationalVector row(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1ULL) row[i] = 1;
    }
    sys.A.push_back(std::move(row));
    sys.b.emplace_back(static_cast<long>(f(mask)));
  }
  IntPoint upper(n);
  for (std::size_t i = 0; i < n; ++i) upper[i] = f.singleton(i);
  return SetInstance(IntBox::from_upper(std::move(upper)), std::move(sys),
                     Monotonicity::down);
}

SetInstance box_instance(const IntBox& box) {
  return SetInstance(box, LinearSystem{}, Monotonicity::down);
}

}  // namespace lexbound
