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
 * @file instances.hpp
 * @brief Representations of a bounded set S together with its integer
 * feasibility and membership oracles.
 *
 * A SetInstance is a box plus a body. S_I is the set of integer points of the
 * box that satisfy the body. Instances are validated on construction and
 * immutable afterwards.
 */

#ifndef LEXBOUND_INSTANCES_HPP
#define LEXBOUND_INSTANCES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexbound/core.hpp"
#include "lexbound/options.hpp"

namespace lexbound {

enum class Monotonicity { down, up, none, unknown };

std::string_view to_string(Monotonicity m);
Monotonicity monotonicity_from_string(std::string_view s);

/// Rows A x <= b.
struct LinearSystem {
  std::vector<RationalVector> A;
  RationalVector b;
  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

/// Rows A x <= b where every column is entirely >= 0 or entirely <= 0.
struct SignSeparated {
  std::vector<RationalVector> A;
  RationalVector b;
  friend bool operator==(const SignSeparated&, const SignSeparated&) = default;
};

/// Single row a x <= b.
struct Knapsack {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;
  friend bool operator==(const Knapsack&, const Knapsack&) = default;
};

/// Stable sets: x_i + x_j <= 1 for every edge. Vertices are 0-based.
struct IndependenceGraph {
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const IndependenceGraph&,
                         const IndependenceGraph&) = default;
};

/// Nondecreasing integer submodular f with f(empty) = 0, over subsets of
/// {0..n-1} encoded as bitmasks. The body it induces is the polymatroid
/// P_f = {x >= 0 : x(T) <= f(T) for all T}.
class SubmodularOracle {
 public:
  enum class Kind { truth_table, concave_of_modular };

  static constexpr std::size_t kMaxElements = 20;
  static constexpr std::size_t kMaxTruthTableElements = 16;
  static constexpr std::size_t kMaxValidatedElements = 12;

  /// values[mask] = f(mask); size must be 2^n with n <= 16.
  static SubmodularOracle truth_table(std::vector<std::int64_t> values);
  /// f(T) = g(sum_{i in T} w_i), g concave nondecreasing with g(0) = 0.
  /// g must have at least sum(w) + 1 entries.
  static SubmodularOracle concave_of_modular(std::vector<std::int64_t> weights,
                                             std::vector<std::int64_t> g);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::uint64_t mask) const;
  /// f({i}).
  std::int64_t singleton(std::size_t i) const { return (*this)(1ULL << i); }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  const std::vector<std::int64_t>& g() const noexcept { return g_; }

  /// False for truth tables too large to check exhaustively.
  bool validated() const noexcept { return validated_; }

  friend bool operator==(const SubmodularOracle& a, const SubmodularOracle& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.values_ == b.values_ &&
           a.weights_ == b.weights_ && a.g_ == b.g_;
  }

 private:
  Kind kind_ = Kind::truth_table;
  std::size_t n_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> g_;
  bool validated_ = true;
};

/// Convex hull of rational generators.
struct VPolytope {
  std::vector<RationalVector> generators;
  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

enum class LexDirection { at_most, at_least };

/// x <=_sigma threshold (at_most) or x >=_sigma threshold (at_least).
struct LexConstraint {
  LexDirection direction = LexDirection::at_most;
  Permutation sigma;
  IntPoint threshold;

  bool satisfied_by(const IntPoint& x) const;
  friend bool operator==(const LexConstraint&, const LexConstraint&) = default;
};

struct ExplicitLexSet {
  std::vector<LexConstraint> constraints;
  friend bool operator==(const ExplicitLexSet&, const ExplicitLexSet&) = default;
};

struct PointList {
  std::vector<IntPoint> points;
  friend bool operator==(const PointList&, const PointList&) = default;
};

using Body = std::variant<LinearSystem, SignSeparated, Knapsack,
                          IndependenceGraph, SubmodularOracle, VPolytope,
                          ExplicitLexSet, PointList>;

namespace detail {
class RowSystem;
}

class SetInstance {
 public:
  /// Largest box on which a declared or unknown monotonicity is checked by
  /// enumeration.
  static constexpr std::uint64_t kMonotonicityCheckCap = 10'000;

  /// Validates the body against the box; throws DomainError (or ResourceError
  /// for scale limits). A declared `down`/`up` tag is verified on small boxes;
  /// `unknown` is resolved on small boxes and left unknown otherwise.
  SetInstance(IntBox box, Body body,
              Monotonicity declared = Monotonicity::unknown);

  const IntBox& box() const noexcept { return box_; }
  const Body& body() const noexcept { return body_; }
  std::size_t dim() const noexcept { return box_.dim(); }
  /// Tag as given on input; serialized verbatim.
  Monotonicity declared_monotonicity() const noexcept { return declared_; }
  /// Tag after detection; what monotone-only operations consult.
  Monotonicity monotonicity() const noexcept { return resolved_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// "linear", "sign_separated", ... as in the JSON schema.
  std::string_view body_type() const;

  /// Same body on a different box (re-validated).
  SetInstance with_box(IntBox box) const;

  /// Scaled integer rows for linear, sign_separated, knapsack and indep_graph
  /// bodies; nullptr otherwise.
  const detail::RowSystem* rows() const noexcept { return rows_.get(); }
  /// Columns of the row system are sign separated (always true for
  /// knapsack, indep_graph and sign_separated bodies).
  bool has_sign_separated_rows() const;
  /// Point list body sorted for binary search; nullptr for other bodies.
  const std::vector<IntPoint>* sorted_points() const noexcept {
    return sorted_points_.get();
  }

  friend bool operator==(const SetInstance& a, const SetInstance& b) {
    return a.box_ == b.box_ && a.body_ == b.body_ && a.declared_ == b.declared_;
  }

 private:
  void validate_body();
  void resolve_monotonicity();

  IntBox box_;
  Body body_;
  Monotonicity declared_ = Monotonicity::unknown;
  Monotonicity resolved_ = Monotonicity::unknown;
  std::vector<std::string> warnings_;
  std::shared_ptr<const detail::RowSystem> rows_;
  std::shared_ptr<const std::vector<IntPoint>> sorted_points_;
};

/// Membership of an integer point of the box in S. False outside the box.
bool contains(const SetInstance& inst, const IntPoint& x);

/// Whether S_I meets the sub-box. Exact; throws ResourceError when the search
/// exceeds options.node_cap nodes and DimensionError unless sub lies in the
/// instance box.
bool is_int_feasible(const SetInstance& inst, const IntBox& sub,
                     const SolverOptions& options = {});

/// Exact rational test of x in conv(generators). At most 64 generators in
/// dimension at most 10; larger inputs raise ResourceError.
bool hull_member(const std::vector<RationalVector>& generators,
                 const RationalVector& x);

/// Box with l_j = min x_j and u_j = max x_j over S_I, by bisection with
/// is_int_feasible. Throws InfeasibleError when S_I is empty.
IntBox tighten_bounds(const SetInstance& inst, const SolverOptions& options = {});

/// u + l - S, when the body type can express it; nullopt otherwise.
std::optional<SetInstance> complement_instance(const SetInstance& inst);

/// P_f on the box [0, f({i})], tagged down.
SetInstance polymatroid_instance(const SubmodularOracle& f);

/// The 2^n - 1 rows x(T) <= f(T) of P_f as an explicit linear system on the
/// box [0, f({i})]. Limited to n <= 10.
SetInstance polymatroid_linear_system(const SubmodularOracle& f);

/// Full box, no constraints.
SetInstance box_instance(const IntBox& box);

RationalVector to_rational(const IntPoint& x);

}  // namespace lexbound

#endif  // LEXBOUND_INSTANCES_HPP
