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
 * @file json_io.hpp
 * @brief JSON instance schema and report helpers.
 *
 *     { "n": 3,
 *       "box": {"lower": [0,0,0], "upper": [1,1,1]},
 *       "body": {"type": "knapsack", "a": [2,3,4], "b": 5},
 *       "monotone": "down" }
 *
 * Rationals are strings "p/q" (integers may also be plain numbers on input).
 * Permutations and graph vertices are 1-based. Malformed input raises
 * ParseError with a JSON pointer to the offending field.
 */

#ifndef LEXBOUND_JSON_IO_HPP
#define LEXBOUND_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "lexbound/bounds.hpp"
#include "lexbound/formulations.hpp"
#include "lexbound/instances.hpp"

namespace lexbound {

using Json = nlohmann::ordered_json;

SetInstance instance_from_json(const Json& j);
Json instance_to_json(const SetInstance& inst);

/// {"direction": "le"|"ge", "perm": [...], "threshold": [...]}.
LexConstraint lex_constraint_from_json(const Json& j, const std::string& path,
                                       std::size_t n);
Json lex_constraint_to_json(const LexConstraint& c);

/// Reads and parses a file; unreadable files and bad JSON are ParseErrors.
Json read_json_file(const std::string& path);
SetInstance load_instance(const std::string& path);

std::string rational_to_string(const Rational& q);
/// "p/q", "p", or an integer JSON value.
Rational rational_from_json(const Json& j, const std::string& path);
/// Comma separated rationals, e.g. "1,-1/2,3".
RationalVector parse_rational_list(std::string_view text);
/// Comma separated 1-based permutation, or "identity" / "reverse".
Permutation parse_permutation(std::string_view text, std::size_t n);

Json point_to_json(const IntPoint& x);
Json perm_to_json(const Permutation& p);
/// {"exact": "p/q", "decimal": ...}.
Json number_to_json(const Rational& q);
Json bound_to_json(const BoundValue& b);
Json report_to_json(const BoundsReport& r);
Json inequality_to_json(const Inequality& row);

}  // namespace lexbound

#endif  // LEXBOUND_JSON_IO_HPP
