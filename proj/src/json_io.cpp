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

#include "lexbound/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "lexbound/errors.hpp"

namespace lexbound {
namespace {

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& field(const Json& j, const std::string& path, std::string_view key) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ParseError(child(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(path, "integer out of range");
    }
    return static_cast<std::int64_t>(v);
  }
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

IntPoint int_vector(const Json& j, const std::string& path) {
  IntPoint out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(integer(j[i], child(path, i)));
  }
  return out;
}

IntPoint int_vector_of_size(const Json& j, const std::string& path, std::size_t n) {
  IntPoint v = int_vector(j, path);
  if (v.size() != n) {
    throw ParseError(path, "expected " + std::to_string(n) + " entries, got " +
                               std::to_string(v.size()));
  }
  return v;
}

RationalVector rational_vector(const Json& j, const std::string& path) {
  RationalVector out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(rational_from_json(j[i], child(path, i)));
  }
  return out;
}

std::vector<RationalVector> rational_matrix(const Json& j, const std::string& path) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(rational_vector(j[i], child(path, i)));
  }
  return out;
}

Permutation permutation(const Json& j, const std::string& path, std::size_t n) {
  const IntPoint images = int_vector_of_size(j, path, n);
  try {
    return Permutation::from_one_based(images);
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

Json rational_vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_string(q));
  return out;
}

Json matrix_json(const std::vector<RationalVector>& A) {
  Json out = Json::array();
  for (const auto& row : A) out.push_back(rational_vector_json(row));
  return out;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_rational_text(std::string_view s, const std::string& path) {
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw ParseError(path, "'" + std::string(s) + "' is not a rational p/q");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer q{std::string(den)};
  if (q == 0) throw ParseError(path, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return parse_rational_text(j.get<std::string>(), path);
  return Rational(static_cast<long>(integer(j, path)));
}

LexConstraint lex_constraint_from_json(const Json& j, const std::string& path,
                                       std::size_t n) {
  const Json& dir = field(j, path, "direction");
  LexDirection d;
  if (dir == "le") {
    d = LexDirection::at_most;
  } else if (dir == "ge") {
    d = LexDirection::at_least;
  } else {
    throw ParseError(child(path, "direction"), "expected 'le' or 'ge'");
  }
  return {d, permutation(field(j, path, "perm"), child(path, "perm"), n),
          int_vector_of_size(field(j, path, "threshold"), child(path, "threshold"), n)};
}

Json lex_constraint_to_json(const LexConstraint& c) {
  Json j;
  j["direction"] = c.direction == LexDirection::at_most ? "le" : "ge";
  j["perm"] = c.sigma.to_one_based();
  j["threshold"] = c.threshold;
  return j;
}

SetInstance instance_from_json(const Json& j) {
  const std::string root;
  const std::int64_t n = integer(field(j, root, "n"), "/n");
  if (n < 1) throw ParseError("/n", "dimension must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(n);

  const Json& box_j = field(j, root, "box");
  IntPoint lower = int_vector_of_size(field(box_j, "/box", "lower"), "/box/lower", dim);
  IntPoint upper = int_vector_of_size(field(box_j, "/box", "upper"), "/box/upper", dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (lower[i] > upper[i]) {
      throw ParseError(child("/box/lower", i), "lower bound exceeds upper bound");
    }
  }
  IntBox box(std::move(lower), std::move(upper));

  Monotonicity tag = Monotonicity::unknown;
  if (auto it = j.find("monotone"); it != j.end()) {
    if (!it->is_string()) throw ParseError("/monotone", "expected a string");
    try {
      tag = monotonicity_from_string(it->get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError("/monotone", e.what());
    }
  }

  const Json& b = field(j, root, "body");
  const Json& type_j = field(b, "/body", "type");
  if (!type_j.is_string()) throw ParseError("/body/type", "expected a string");
  const std::string type = type_j.get<std::string>();

  Body body;
  if (type == "linear" || type == "sign_separated") {
    auto A = rational_matrix(field(b, "/body", "A"), "/body/A");
    auto rhs = rational_vector(field(b, "/body", "b"), "/body/b");
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i].size() != dim) {
        throw ParseError(child("/body/A", i), "expected " + std::to_string(dim) + " entries");
      }
    }
    if (rhs.size() != A.size()) throw ParseError("/body/b", "length differs from row count");
    if (type == "linear") {
      body = LinearSystem{std::move(A), std::move(rhs)};
    } else {
      body = SignSeparated{std::move(A), std::move(rhs)};
    }
  } else if (type == "knapsack") {
    body = Knapsack{int_vector_of_size(field(b, "/body", "a"), "/body/a", dim),
                    integer(field(b, "/body", "b"), "/body/b")};
  } else if (type == "indep_graph") {
    IndependenceGraph g;
    const Json& edges = array(field(b, "/body", "edges"), "/body/edges");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string path = child("/body/edges", e);
      const IntPoint ends = int_vector_of_size(edges[e], path, 2);
      for (std::size_t k = 0; k < 2; ++k) {
        if (ends[k] < 1 || ends[k] > n) {
          throw ParseError(child(path, k), "vertex outside 1.." + std::to_string(n));
        }
      }
      g.edges.emplace_back(static_cast<int>(ends[0] - 1), static_cast<int>(ends[1] - 1));
    }
    body = std::move(g);
  } else if (type == "submodular") {
    const Json& kind = field(b, "/body", "kind");
    if (kind == "truth_table") {
      body = SubmodularOracle::truth_table(
          int_vector(field(b, "/body", "values"), "/body/values"));
    } else if (kind == "concave_of_modular") {
      body = SubmodularOracle::concave_of_modular(
          int_vector(field(b, "/body", "weights"), "/body/weights"),
          int_vector(field(b, "/body", "g"), "/body/g"));
    } else {
      throw ParseError("/body/kind", "expected 'truth_table' or 'concave_of_modular'");
    }
  } else if (type == "vpolytope") {
    auto gens = rational_matrix(field(b, "/body", "generators"), "/body/generators");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].size() != dim) {
        throw ParseError(child("/body/generators", g),
                         "expected " + std::to_string(dim) + " entries");
      }
    }
    body = VPolytope{std::move(gens)};
  } else if (type == "lex_explicit") {
    ExplicitLexSet set;
    const Json& cs = array(field(b, "/body", "constraints"), "/body/constraints");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      set.constraints.push_back(
          lex_constraint_from_json(cs[k], child("/body/constraints", k), dim));
    }
    body = std::move(set);
  } else if (type == "point_list") {
    PointList list;
    const Json& pts = array(field(b, "/body", "points"), "/body/points");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      list.points.push_back(int_vector_of_size(pts[k], child("/body/points", k), dim));
    }
    body = std::move(list);
  } else {
    throw ParseError("/body/type", "unknown body type '" + type + "'");
  }

  try {
    return SetInstance(std::move(box), std::move(body), tag);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError("/body", e.what());
  }
}

Json instance_to_json(const SetInstance& inst) {
  Json j;
  j["n"] = inst.dim();
  j["box"] = {{"lower", inst.box().lower()}, {"upper", inst.box().upper()}};
  Json b;
  b["type"] = std::string(inst.body_type());
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LinearSystem> || std::is_same_v<T, SignSeparated>) {
          b["A"] = matrix_json(body.A);
          b["b"] = rational_vector_json(body.b);
        } else if constexpr (std::is_same_v<T, Knapsack>) {
          b["a"] = body.a;
          b["b"] = body.b;
        } else if constexpr (std::is_same_v<T, IndependenceGraph>) {
          Json edges = Json::array();
          for (auto [u, v] : body.edges) edges.push_back({u + 1, v + 1});
          b["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, SubmodularOracle>) {
          if (body.kind() == SubmodularOracle::Kind::truth_table) {
            b["kind"] = "truth_table";
            b["values"] = body.values();
          } else {
            b["kind"] = "concave_of_modular";
            b["weights"] = body.weights();
            b["g"] = body.g();
          }
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          b["generators"] = matrix_json(body.generators);
        } else if constexpr (std::is_same_v<T, ExplicitLexSet>) {
          Json cs = Json::array();
          for (const auto& c : body.constraints) cs.push_back(lex_constraint_to_json(c));
          b["constraints"] = std::move(cs);
        } else if constexpr (std::is_same_v<T, PointList>) {
          b["points"] = body.points;
        }
      },
      inst.body());
  j["body"] = std::move(b);
  j["monotone"] = std::string(to_string(inst.declared_monotonicity()));
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", "invalid JSON in '" + path + "': " + e.what());
  }
}

SetInstance load_instance(const std::string& path) {
  return instance_from_json(read_json_file(path));
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(parse_rational_text(item, "/" + std::to_string(out.size())));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  if (text == "identity") return Permutation::identity(n);
  if (text == "reverse") return Permutation::reverse(n);
  std::vector<std::int64_t> images;
  for (const auto& q : parse_rational_list(text)) {
    if (q.get_den() != 1) throw DomainError("permutation entries must be integers");
    images.push_back(q.get_num().get_si());
  }
  if (images.size() != n) {
    throw DimensionError("permutation has " + std::to_string(images.size()) +
                         " entries, expected " + std::to_string(n));
  }
  return Permutation::from_one_based(images);
}

Json point_to_json(const IntPoint& x) { return Json(x); }

Json perm_to_json(const Permutation& p) { return Json(p.to_one_based()); }

Json number_to_json(const Rational& q) {
  return {{"exact", rational_to_string(q)}, {"decimal", q.get_d()}};
}

Json bound_to_json(const BoundValue& b) {
  Json j = number_to_json(b.value);
  j["point"] = point_to_json(b.point);
  if (b.perm) j["perm"] = perm_to_json(*b.perm);
  return j;
}

Json report_to_json(const BoundsReport& r) {
  Json j;
  auto put = [&](const char* key, const std::optional<BoundValue>& v) {
    j[key] = v ? bound_to_json(*v) : Json(nullptr);
  };
  put("z_prim_max", r.z_prim_max);
  put("z_prim_min", r.z_prim_min);
  put("z_prim", r.z_prim);
  put("z_dual", r.z_dual);
  if (r.z_star) put("z_star", r.z_star);
  j["family_size"] = r.family_size;
  j["distinct_maxima"] = r.distinct_maxima;
  j["distinct_minima"] = r.distinct_minima;
  j["dual_constraints"] = r.dual_constraints;
  j["dual_method"] = r.dual_method;
  return j;
}

Json inequality_to_json(const Inequality& row) {
  Json j;
  j["coeffs"] = rational_vector_json(row.coeffs);
  j["rhs"] = rational_to_string(row.rhs);
  Json prov;
  prov["kind"] = std::string(to_string(row.provenance.kind));
  if (row.provenance.kind != InequalityKind::box) prov["v"] = row.provenance.v;
  if (row.provenance.kind == InequalityKind::strengthened) prov["i"] = row.provenance.i;
  j["provenance"] = std::move(prov);
  return j;
}

}  // namespace lexbound
