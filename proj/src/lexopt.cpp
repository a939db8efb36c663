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

#include "lexbound/lexopt.hpp"

#include <string>

#include "lexbound/errors.hpp"
#include "lexbound/lexsets.hpp"
#include "lexbound/row_system.hpp"

namespace lexbound {

std::string_view to_string(Direction d) {
  return d == Direction::max ? "max" : "min";
}

Direction direction_from_string(std::string_view s) {
  if (s == "max") return Direction::max;
  if (s == "min") return Direction::min;
  throw DomainError("direction must be 'max' or 'min', got '" + std::string(s) + "'");
}

namespace {

void check_sigma(const SetInstance& inst, const Permutation& sigma) {
  if (sigma.size() != inst.dim()) {
    throw DimensionError("permutation has size " + std::to_string(sigma.size()) +
                         ", instance has dimension " + std::to_string(inst.dim()));
  }
}

}  // namespace

std::optional<IntPoint> lex_opt_in_box(const SetInstance& inst, const IntBox& sub,
                                       const Permutation& sigma, Direction dir,
                                       const SolverOptions& options) {
  check_sigma(inst, sigma);
  if (!is_int_feasible(inst, sub, options)) return std::nullopt;
  IntBox cur = sub;
  for (std::size_t p = inst.dim(); p-- > 0;) {
    const int c = sigma.at(p);
    std::int64_t lo = cur.lower(c);
    std::int64_t hi = cur.upper(c);
    if (dir == Direction::max) {
      // Largest v with S_I meeting cur and x_c >= v.
      while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (is_int_feasible(inst, *cur.restrict(c, mid, cur.upper(c)), options)) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
    } else {
      while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (is_int_feasible(inst, *cur.restrict(c, cur.lower(c), mid), options)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
    }
    cur = cur.fix(c, lo);
  }
  return cur.lower();
}

IntPoint lex_max_greedy(const SetInstance& inst, const Permutation& sigma,
                        const SolverOptions& options) {
  auto x = lex_opt_in_box(inst, inst.box(), sigma, Direction::max, options);
  if (!x) throw InfeasibleError("instance has no integer points");
  return *x;
}

IntPoint lex_min_greedy(const SetInstance& inst, const Permutation& sigma,
                        const SolverOptions& options) {
  auto x = lex_opt_in_box(inst, inst.box(), sigma, Direction::min, options);
  if (!x) throw InfeasibleError("instance has no integer points");
  return *x;
}

namespace {

BisectionResult bisect(const SetInstance& inst, const Permutation& sigma,
                       Direction dir, const SolverOptions& options) {
  check_sigma(inst, sigma);
  BisectionResult result;
  IntBox box = inst.box();
  ++result.feasibility_calls;
  if (!is_int_feasible(inst, box, options)) {
    throw InfeasibleError("instance has no integer points");
  }
  std::size_t p = inst.dim();
  while (true) {
    while (p > 0 && box.lower(sigma.at(p - 1)) == box.upper(sigma.at(p - 1))) --p;
    if (p == 0) break;
    const int k = sigma.at(p - 1);
    const std::int64_t lo = box.lower(k);
    const std::int64_t hi = box.upper(k);
    IntBox keep, other;
    if (dir == Direction::max) {
      const std::int64_t m = lo + (hi - lo + 1) / 2;  // ceil((lo + hi) / 2)
      keep = *box.restrict(k, m, hi);
      other = *box.restrict(k, lo, m - 1);
    } else {
      const std::int64_t m = lo + (hi - lo) / 2;  // floor((lo + hi) / 2)
      keep = *box.restrict(k, lo, m);
      other = *box.restrict(k, m + 1, hi);
    }
    ++result.feasibility_calls;
    box = is_int_feasible(inst, keep, options) ? std::move(keep) : std::move(other);
  }
  result.point = box.lower();
  return result;
}

}  // namespace

BisectionResult lex_max_bisection(const SetInstance& inst, const Permutation& sigma,
                                  const SolverOptions& options) {
  return bisect(inst, sigma, Direction::max, options);
}

BisectionResult lex_min_bisection(const SetInstance& inst, const Permutation& sigma,
                                  const SolverOptions& options) {
  return bisect(inst, sigma, Direction::min, options);
}

namespace {

const detail::RowSystem& sign_separated_rows(const SetInstance& inst) {
  const auto* rows = inst.rows();
  if (!rows || !rows->sign_separated()) {
    throw DomainError("closed form needs a sign-separated row system, got " +
                      std::string(inst.body_type()));
  }
  return *rows;
}

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// The closed form for max. Slack is measured at the corner that minimizes
// every row: nonpositive columns at u, the others at l.
IntPoint sign_separated_max(const SetInstance& inst, const detail::RowSystem& rows,
                            const Permutation& sigma) {
  const IntBox& box = inst.box();
  const std::size_t n = inst.dim();
  const std::size_t m = rows.row_count();
  std::vector<Integer> slack(m);
  for (std::size_t i = 0; i < m; ++i) {
    slack[i] = rows.rhs(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto corner = rows.column_sign(j) < 0 ? box.upper(j) : box.lower(j);
      slack[i] -= rows.coef(i, j) * as_integer(corner);
    }
    if (slack[i] < 0) throw InfeasibleError("instance has no integer points");
  }
  IntPoint x(n);
  for (std::size_t p = n; p-- > 0;) {
    const int c = sigma.at(p);
    if (rows.column_sign(c) < 0) {
      x[c] = box.upper(c);
      continue;
    }
    Integer room = as_integer(box.width(c) - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const Integer& a = rows.coef(i, c);
      if (a > 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), slack[i].get_mpz_t(), a.get_mpz_t());
        if (q < room) room = q;
      }
    }
    x[c] = box.lower(c) + room.get_si();
    for (std::size_t i = 0; i < m; ++i) slack[i] -= rows.coef(i, c) * room;
  }
  return x;
}

IntPoint sign_separated_min(const SetInstance& inst, const detail::RowSystem& rows,
                            const Permutation& sigma) {
  const IntBox& box = inst.box();
  const std::size_t n = inst.dim();
  const std::size_t m = rows.row_count();
  std::vector<Integer> slack(m);
  for (std::size_t i = 0; i < m; ++i) {
    slack[i] = rows.rhs(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto corner = rows.column_sign(j) < 0 ? box.upper(j) : box.lower(j);
      slack[i] -= rows.coef(i, j) * as_integer(corner);
    }
    if (slack[i] < 0) throw InfeasibleError("instance has no integer points");
  }
  IntPoint x(n);
  for (std::size_t p = n; p-- > 0;) {
    const int c = sigma.at(p);
    if (rows.column_sign(c) >= 0) {
      x[c] = box.lower(c);
      continue;
    }
    Integer room = as_integer(box.width(c) - 1);
    for (std::size_t i = 0; i < m; ++i) {
      const Integer a = -rows.coef(i, c);
      if (a > 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), slack[i].get_mpz_t(), a.get_mpz_t());
        if (q < room) room = q;
      }
    }
    x[c] = box.upper(c) - room.get_si();
    for (std::size_t i = 0; i < m; ++i) slack[i] += rows.coef(i, c) * room;
  }
  return x;
}

}  // namespace

IntPoint lex_max_sign_separated(const SetInstance& inst, const Permutation& sigma,
                                const SolverOptions& options) {
  check_sigma(inst, sigma);
  const auto& rows = sign_separated_rows(inst);
  const IntBox tight = tighten_bounds(inst, options);
  if (tight.upper() != inst.box().upper()) {
    throw DomainError("upper bounds are not tight (tightened upper bounds " +
                      to_string(tight.upper()) + "); tighten the box first");
  }
  return sign_separated_max(inst, rows, sigma);
}

IntPoint lex_min_sign_separated(const SetInstance& inst, const Permutation& sigma,
                                const SolverOptions& options) {
  check_sigma(inst, sigma);
  const auto& rows = sign_separated_rows(inst);
  const IntBox tight = tighten_bounds(inst, options);
  if (tight.lower() != inst.box().lower()) {
    throw DomainError("lower bounds are not tight (tightened lower bounds " +
                      to_string(tight.lower()) + "); tighten the box first");
  }
  return sign_separated_min(inst, rows, sigma);
}

IntPoint lex_max_polymatroid(const SubmodularOracle& f, const Permutation& sigma) {
  if (sigma.size() != f.size()) {
    throw DimensionError("permutation size does not match the ground set");
  }
  if (!f.validated()) {
    throw DomainError("submodular oracle is unvalidated; the formula needs a "
                      "validated function");
  }
  IntPoint x(f.size());
  std::uint64_t mask = 0;
  std::int64_t prev = 0;
  for (std::size_t p = f.size(); p-- > 0;) {
    mask |= 1ULL << sigma.at(p);
    const std::int64_t cur = f(mask);
    x[sigma.at(p)] = cur - prev;
    prev = cur;
  }
  return x;
}

IntPoint lex_min_polymatroid(const SubmodularOracle& f, const Permutation& sigma) {
  if (sigma.size() != f.size()) {
    throw DimensionError("permutation size does not match the ground set");
  }
  return IntPoint(f.size(), 0);
}

IntPoint permutahedron_lex(std::size_t n, const Permutation& sigma, Direction dir) {
  if (n == 0) throw DomainError("permutahedron needs n >= 1");
  if (sigma.size() != n) {
    throw DimensionError("permutation size does not match n");
  }
  IntPoint x(n);
  for (std::size_t p = 0; p < n; ++p) {
    x[sigma.at(p)] = dir == Direction::max ? static_cast<std::int64_t>(p + 1)
                                           : static_cast<std::int64_t>(n - p);
  }
  return x;
}

IntPoint lex_opt_with_lex_constraints(const SetInstance& inst,
                                      std::span<const LexConstraint> constraints,
                                      const Permutation& sigma, Direction dir,
                                      const SolverOptions& options) {
  check_sigma(inst, sigma);
  if (constraints.size() > options.fixing_cap) {
    throw ResourceError(std::to_string(constraints.size()) +
                        " lex constraints exceed the fixing cap of " +
                        std::to_string(options.fixing_cap));
  }
  std::optional<IntPoint> best;
  for_each_fixing_cell(
      inst.box(), constraints,
      [&](const IntBox& cell) {
        if (best) {
          // The best any point of the cell can do is its extreme corner.
          const bool hopeless = dir == Direction::max
                                    ? lex_le(cell.upper(), *best, sigma)
                                    : lex_le(*best, cell.lower(), sigma);
          if (hopeless) return true;
        }
        auto x = lex_opt_in_box(inst, cell, sigma, dir, options);
        if (x && (!best || (dir == Direction::max ? lex_le(*best, *x, sigma)
                                                  : lex_le(*x, *best, sigma)))) {
          best = std::move(x);
        }
        return true;
      },
      options.node_cap);
  if (!best) throw InfeasibleError("no integer point satisfies the lex constraints");
  return *best;
}

IntPoint lex_opt(const SetInstance& inst, const Permutation& sigma, Direction dir,
                 const SolverOptions& options) {
  check_sigma(inst, sigma);
  if (const auto* f = std::get_if<SubmodularOracle>(&inst.body())) {
    // The formulas describe P_f itself; they apply when the box does not cut it.
    IntPoint singletons(f->size());
    for (std::size_t i = 0; i < f->size(); ++i) singletons[i] = f->singleton(i);
    if (f->validated() && inst.box().lower_is_zero() &&
        inst.box().upper() == singletons) {
      return dir == Direction::max ? lex_max_polymatroid(*f, sigma)
                                   : lex_min_polymatroid(*f, sigma);
    }
  }
  if (const auto* list = std::get_if<PointList>(&inst.body())) {
    const IntPoint* best = nullptr;
    for (const auto& p : list->points) {
      if (!best || (dir == Direction::max ? lex_le(*best, p, sigma)
                                          : lex_le(p, *best, sigma))) {
        best = &p;
      }
    }
    if (!best) throw InfeasibleError("point list is empty");
    return *best;
  }
  return dir == Direction::max ? lex_max_greedy(inst, sigma, options)
                               : lex_min_greedy(inst, sigma, options);
}

}  // namespace lexbound
