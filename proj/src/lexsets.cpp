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

#include "lexbound/lexsets.hpp"

#include <string>

#include "lexbound/errors.hpp"

namespace lexbound {

std::vector<IntBox> lex_constraint_pieces(const IntBox& box,
                                          const LexConstraint& constraint) {
  const std::size_t n = box.dim();
  const auto& tau = constraint.sigma;
  const auto& t = constraint.threshold;
  if (tau.size() != n || t.size() != n) {
    throw DimensionError("lex constraint does not match the box dimension");
  }
  std::vector<IntBox> pieces;
  if (box.contains(t)) pieces.emplace_back(t, t);

  for (std::size_t p = 0; p < n; ++p) {
    std::optional<IntBox> piece = box;
    for (std::size_t q = p + 1; q < n && piece; ++q) {
      const int c = tau.at(q);
      piece = piece->restrict(c, t[c], t[c]);
    }
    if (!piece) continue;
    const int c = tau.at(p);
    if (constraint.direction == LexDirection::at_most) {
      piece = piece->restrict(c, piece->lower(c), t[c] - 1);
    } else {
      piece = piece->restrict(c, t[c] + 1, piece->upper(c));
    }
    if (piece) pieces.push_back(std::move(*piece));
  }
  return pieces;
}

namespace {

bool visit_cells(const IntBox& current,
                 std::span<const LexConstraint> constraints,
                 const std::function<bool(const IntBox&)>& visit,
                 std::uint64_t node_cap, std::uint64_t& nodes) {
  if (constraints.empty()) return visit(current);
  for (const IntBox& piece : lex_constraint_pieces(current, constraints[0])) {
    if (++nodes > node_cap) {
      throw ResourceError("fixing enumeration exceeded " +
                          std::to_string(node_cap) + " nodes");
    }
    if (!visit_cells(piece, constraints.subspan(1), visit, node_cap, nodes)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void for_each_fixing_cell(const IntBox& box,
                          std::span<const LexConstraint> constraints,
                          const std::function<bool(const IntBox&)>& visit,
                          std::uint64_t node_cap) {
  std::uint64_t nodes = 0;
  visit_cells(box, constraints, visit, node_cap, nodes);
}

bool is_vacuous(const LexConstraint& constraint, const IntBox& box) {
  return constraint.direction == LexDirection::at_most
             ? constraint.threshold == box.upper()
             : constraint.threshold == box.lower();
}

}  // namespace lexbound
