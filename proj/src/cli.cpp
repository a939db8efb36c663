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

#include "lexbound/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lexbound/bounds.hpp"
#include "lexbound/bruteforce.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/formulations.hpp"
#include "lexbound/json_io.hpp"
#include "lexbound/lexopt.hpp"
#include "lexbound/random_instances.hpp"
#include "lexbound/selftest.hpp"
#include "lexbound/structure.hpp"

namespace lexbound {
namespace {

struct GlobalFlags {
  bool pretty = false;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

struct LexoptArgs {
  std::string instance, perm = "identity", dir = "max", algo = "greedy", constraints;
};

struct BoundsArgs {
  std::string instance, c, family = "h1";
  bool ground_truth = false;
};

struct StructureArgs {
  std::string instance, op, perm = "identity", theta, family = "h1";
  std::int64_t n = 4, delta = 2, kappa = 2;
};

struct FormulateArgs {
  std::string instance, kind;
  bool verify = false;
};

struct OracleArgs {
  std::string instance, op, perm = "identity", dir = "max", c, constraints;
};

struct BenchArgs {
  std::string family = "simplices", n = "4..6", delta = "2..3", kappa = "2..10", c = "ones";
};

struct SelftestArgs {
  std::string level = "quick";
};

// ---------------------------------------------------------------------------
// Argument helpers

std::vector<LexConstraint> load_constraints(const std::string& path, std::size_t n) {
  const Json j = read_json_file(path);
  const Json* list = &j;
  if (j.is_object()) {
    auto it = j.find("constraints");
    if (it == j.end()) throw ParseError("/constraints", "missing field");
    list = &*it;
  }
  if (!list->is_array()) throw ParseError("", "expected an array of lex constraints");
  std::vector<LexConstraint> out;
  for (std::size_t k = 0; k < list->size(); ++k) {
    out.push_back(lex_constraint_from_json((*list)[k], "/" + std::to_string(k), n));
  }
  return out;
}

PermFamily load_family(const std::string& spec, const SetInstance& inst,
                       const SolverOptions& opt) {
  const std::size_t n = inst.dim();
  if (spec == "h1") return family_H1(n);
  if (spec == "h2") return family_H2(inst, opt);
  if (spec == "h3") return family_H3(inst, opt);
  if (spec == "all") return family_all(n);
  if (spec.rfind("file:", 0) == 0) {
    const Json j = read_json_file(spec.substr(5));
    const Json* list = &j;
    if (j.is_object()) {
      auto it = j.find("perms");
      if (it == j.end()) throw ParseError("/perms", "missing field");
      list = &*it;
    }
    if (!list->is_array()) throw ParseError("", "expected an array of permutations");
    std::vector<Permutation> perms;
    for (std::size_t k = 0; k < list->size(); ++k) {
      const std::string path = "/" + std::to_string(k);
      const Json& p = (*list)[k];
      if (!p.is_array() || p.size() != n) {
        throw ParseError(path, "expected " + std::to_string(n) + " entries");
      }
      std::vector<std::int64_t> images;
      for (const auto& v : p) {
        if (!v.is_number_integer()) throw ParseError(path, "expected integers");
        images.push_back(v.get<std::int64_t>());
      }
      try {
        perms.push_back(Permutation::from_one_based(images));
      } catch (const DomainError& e) {
        throw ParseError(path, e.what());
      }
    }
    return PermFamily(std::move(perms));
  }
  throw DomainError("unknown family '" + spec + "' (expected h1, h2, h3, all or file:PATH)");
}

RationalVector objective_for(const std::string& text, std::size_t n) {
  if (text == "ones") return RationalVector(n, Rational(1));
  auto c = parse_rational_list(text);
  if (c.size() != n) {
    throw DimensionError("objective has " + std::to_string(c.size()) + " entries, expected " +
                         std::to_string(n));
  }
  return c;
}

IntPoint parse_int_list(const std::string& text, std::size_t n) {
  IntPoint out;
  for (const auto& q : parse_rational_list(text)) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      throw DomainError("expected integer entries in '" + text + "'");
    }
    out.push_back(q.get_num().get_si());
  }
  if (out.size() != n) throw DimensionError("expected " + std::to_string(n) + " entries");
  return out;
}

// "4..6" or "4".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw DomainError("bad range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(std::string_view(text).substr(0, dots));
  const auto hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw DomainError("empty range '" + text + "'");
  return {lo, hi};
}

Json points_json(const std::vector<IntPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the full report; nothing is printed until the
// whole report exists.

Json cmd_lexopt(const LexoptArgs& a, const SolverOptions& opt) {
  const SetInstance inst = load_instance(a.instance);
  const Permutation sigma = parse_permutation(a.perm, inst.dim());
  const Direction dir = direction_from_string(a.dir);
  Json out;
  if (!a.constraints.empty()) {
    if (a.algo != "greedy") throw DomainError("lex constraints are only supported with --algo greedy");
    const auto cs = load_constraints(a.constraints, inst.dim());
    out["point"] = point_to_json(lex_opt_with_lex_constraints(inst, cs, sigma, dir, opt));
    return out;
  }
  if (a.algo == "greedy") {
    out["point"] = point_to_json(dir == Direction::max ? lex_max_greedy(inst, sigma, opt)
                                                       : lex_min_greedy(inst, sigma, opt));
  } else if (a.algo == "bisect") {
    const auto r = dir == Direction::max ? lex_max_bisection(inst, sigma, opt)
                                         : lex_min_bisection(inst, sigma, opt);
    out["point"] = point_to_json(r.point);
    out["feasibility_calls"] = r.feasibility_calls;
  } else if (a.algo == "closed") {
    if (const auto* f = std::get_if<SubmodularOracle>(&inst.body())) {
      if (inst.box() != polymatroid_instance(*f).box()) {
        throw DomainError("polymatroid closed form needs the box [0, f({i})]");
      }
      out["point"] = point_to_json(dir == Direction::max ? lex_max_polymatroid(*f, sigma)
                                                         : lex_min_polymatroid(*f, sigma));
    } else if (inst.has_sign_separated_rows()) {
      out["point"] = point_to_json(dir == Direction::max
                                       ? lex_max_sign_separated(inst, sigma, opt)
                                       : lex_min_sign_separated(inst, sigma, opt));
    } else {
      throw DomainError("no closed form for body type '" + std::string(inst.body_type()) + "'");
    }
  } else {
    throw DomainError("unknown algorithm '" + a.algo + "'");
  }
  return out;
}

Json cmd_bounds(const BoundsArgs& a, const SolverOptions& opt) {
  const SetInstance inst = load_instance(a.instance);
  const RationalVector c = objective_for(a.c, inst.dim());
  const PermFamily family = load_family(a.family, inst, opt);
  Json out = report_to_json(compute_bounds(inst, family, c, a.ground_truth, opt));
  out["family"] = a.family;
  return out;
}

Json simplices_json(const SimplicesFamily& s) {
  Json out;
  out["instance"] = instance_to_json(s.instance);
  out["rho"] = s.rho;
  out["lexmax_by_position"] = point_to_json(s.lexmax_by_position);
  out["witness"] = point_to_json(s.witness);
  return out;
}

Json cmd_structure(const StructureArgs& a, const SolverOptions& opt) {
  if (a.op == "gen-simplices") return simplices_json(simplices_instance(a.n, a.delta));
  if (a.op == "gen-kappa") {
    const auto k = kappa_family_instance(a.n, a.kappa);
    Json out;
    out["instance"] = instance_to_json(k.instance);
    out["z_star"] = number_to_json(k.z_star);
    out["primal_ratio"] = number_to_json(k.primal_ratio);
    return out;
  }
  if (a.instance.empty()) throw DomainError("--instance is required for --op " + a.op);
  const SetInstance inst = load_instance(a.instance);
  const std::size_t n = inst.dim();
  Json out;
  out["op"] = a.op;
  if (a.op == "maximal") {
    const auto pts = maximal_points(inst, opt);
    out["count"] = pts.size();
    out["points"] = points_json(pts);
  } else if (a.op == "min-infeasible") {
    const auto pts = minimal_infeasible_points(inst, opt);
    out["count"] = pts.size();
    out["points"] = points_json(pts);
  } else if (a.op == "maxi-lexset") {
    const Permutation sigma = parse_permutation(a.perm, n);
    const IntPoint theta = a.theta.empty() ? lex_opt(inst, sigma, Direction::max, opt)
                                           : parse_int_list(a.theta, n);
    out["theta"] = point_to_json(theta);
    out["points"] = points_json(maxi_of_lex_set(sigma, theta, inst.box()));
    out["maximal"] = points_json(maxi_of_lex_set_filtered(sigma, theta, inst.box()));
  } else if (a.op == "is-lexordered") {
    const Permutation sigma = parse_permutation(a.perm, n);
    const IntPoint theta = lex_opt(inst, sigma, Direction::max, opt);
    out["lex_ordered"] = is_lex_ordered(inst, sigma, opt);
    out["theta"] = point_to_json(theta);
    Json corners = Json::array();
    for (const auto& p : maxi_of_lex_set(sigma, theta, inst.box())) {
      if (p == theta) continue;
      corners.push_back({{"point", point_to_json(p)}, {"feasible", contains(inst, p)}});
    }
    out["corners"] = std::move(corners);
  } else if (a.op == "dual-tightness") {
    const auto r = dual_tightness_check(inst, load_family(a.family, inst, opt), opt);
    out["tight"] = r.tight;
    out["counterexample"] = r.counterexample ? point_to_json(*r.counterexample) : Json(nullptr);
  } else {
    throw DomainError("unknown structure op '" + a.op + "'");
  }
  return out;
}

Json cmd_formulate(const FormulateArgs& a, const SolverOptions& opt) {
  const SetInstance inst = load_instance(a.instance);
  Json out;
  out["kind"] = a.kind;
  if (a.kind == "cover" || a.kind == "strengthened") {
    const auto rows = a.kind == "cover" ? cover_formulation(inst, opt)
                                        : strengthened_formulation(inst, opt);
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(inequality_to_json(r));
    out["count"] = rows.size();
    out["inequalities"] = std::move(arr);
    if (a.verify) out["verified"] = verify_formulation(inst, rows, opt);
  } else if (a.kind == "extended") {
    const auto ef = extended_formulation(inst, opt);
    out["generators"] = points_json(ef.generators);
    out["template"] = ef.template_description();
    if (a.verify) {
      const auto pts = oracle::box_points(inst.box(), opt.enumeration_cap);
      out["verified"] = std::all_of(pts.begin(), pts.end(), [&](const IntPoint& x) {
        return ef.admits(x) == contains(inst, x);
      });
    }
  } else {
    throw DomainError("unknown formulation kind '" + a.kind + "'");
  }
  return out;
}

Json cmd_oracle(const OracleArgs& a, const SolverOptions& opt) {
  const SetInstance inst = load_instance(a.instance);
  const std::size_t n = inst.dim();
  Json out;
  out["op"] = a.op;
  if (a.op == "lexset") {
    const auto cs = a.constraints.empty() ? std::vector<LexConstraint>{}
                                          : load_constraints(a.constraints, n);
    const auto pts = oracle::lexset_intersection(inst.box(), cs, opt.enumeration_cap);
    out["count"] = pts.size();
    out["points"] = points_json(pts);
    return out;
  }
  if (a.op == "min-infeasible") {
    const auto pts = oracle::minimal_infeasible(inst);
    out["count"] = pts.size();
    out["points"] = points_json(pts);
    return out;
  }
  auto pts = oracle::enumerate(inst, opt.enumeration_cap);
  if (!a.constraints.empty()) {
    const auto cs = load_constraints(a.constraints, n);
    std::erase_if(pts, [&](const IntPoint& x) {
      return !std::all_of(cs.begin(), cs.end(),
                          [&](const LexConstraint& c) { return c.satisfied_by(x); });
    });
  }
  if (a.op == "enumerate") {
    out["count"] = pts.size();
    out["points"] = points_json(pts);
  } else if (a.op == "lexopt") {
    if (pts.empty()) throw InfeasibleError("no feasible point");
    out["point"] = point_to_json(
        oracle::lex_opt(pts, parse_permutation(a.perm, n), direction_from_string(a.dir)));
  } else if (a.op == "maximal") {
    const auto m = oracle::maximal(pts);
    out["count"] = m.size();
    out["points"] = points_json(m);
  } else if (a.op == "optimum") {
    if (pts.empty()) throw InfeasibleError("no feasible point");
    const auto r = oracle::optimum(pts, objective_for(a.c, n));
    out["z_star"] = number_to_json(r.value);
    out["argmax"] = points_json(r.argmax);
  } else {
    throw DomainError("unknown oracle op '" + a.op + "'");
  }
  return out;
}

Json cmd_bench(const BenchArgs& a, const SolverOptions& opt) {
  const auto [n_lo, n_hi] = parse_range(a.n);
  Json rows = Json::array();
  Json out;
  out["family"] = a.family;
  if (a.family == "simplices") {
    const auto [d_lo, d_hi] = parse_range(a.delta);
    for (auto n = n_lo; n <= n_hi; ++n) {
      for (auto d = d_lo; d <= d_hi; ++d) {
        const auto s = simplices_instance(n, d);
        const auto c = objective_for(a.c, static_cast<std::size_t>(n));
        const auto r = compute_bounds(s.instance, family_all(static_cast<std::size_t>(n)), c,
                                      true, opt);
        Json row;
        row["n"] = n;
        row["delta"] = d;
        row["z_star"] = number_to_json(r.z_star->value);
        row["z_dual"] = number_to_json(r.z_dual->value);
        row["gap"] = number_to_json(r.z_dual->value - r.z_star->value);
        row["witness_value"] = number_to_json(dot(c, s.witness));
        row["strict"] = r.z_dual->value > r.z_star->value;
        rows.push_back(std::move(row));
      }
    }
  } else if (a.family == "kappa") {
    const auto [k_lo, k_hi] = parse_range(a.kappa);
    for (auto n = n_lo; n <= n_hi; ++n) {
      for (auto k = k_lo; k <= k_hi; ++k) {
        const auto kf = kappa_family_instance(n, k);
        const auto c = objective_for(a.c, static_cast<std::size_t>(n));
        const auto r = compute_bounds(kf.instance, family_H1(static_cast<std::size_t>(n)), c,
                                      false, opt);
        Json row;
        row["n"] = n;
        row["kappa"] = k;
        row["z_star"] = number_to_json(kf.z_star);
        row["z_prim"] = number_to_json(r.z_prim->value);
        row["ratio"] = number_to_json(r.z_prim->value / kf.z_star);
        row["predicted"] = number_to_json(kf.primal_ratio);
        rows.push_back(std::move(row));
      }
    }
  } else {
    throw DomainError("unknown bench family '" + a.family + "' (expected simplices or kappa)");
  }
  out["rows"] = std::move(rows);
  return out;
}

Json cmd_selftest(const SelftestArgs& a, std::uint64_t seed, const SolverOptions& opt,
                  bool& all_passed) {
  const auto results = run_selftest(selftest_level_from_string(a.level), seed, opt);
  Json arr = Json::array();
  all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    Json row;
    row["name"] = r.name;
    row["passed"] = r.passed;
    if (!r.detail.empty()) row["detail"] = r.detail;
    arr.push_back(std::move(row));
  }
  Json out;
  out["level"] = a.level;
  out["passed"] = all_passed;
  out["results"] = std::move(arr);
  return out;
}

// ---------------------------------------------------------------------------
// Human-readable rendering for --pretty.

bool is_number_object(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal");
}

std::string cell(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (is_number_object(j)) return j["exact"].get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) s += ", ";
      s += cell(j[k]);
    }
    return s + ")";
  }
  if (j.is_object()) {
    std::string s;
    for (const auto& [key, v] : j.items()) {
      if (!s.empty()) s += " ";
      s += key + "=" + cell(v);
    }
    return s;
  }
  return j.dump();
}

bool flat_object(const Json& j) {
  if (!j.is_object()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& v) {
    return !v.is_object() || is_number_object(v) || (v.contains("kind") && v.size() <= 3);
  });
}

void render_table(const Json& rows, std::ostream& os, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (const auto& [key, v] : r.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? cell(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << line[c]
         << (c + 1 < line.size() ? "  " : "");
    }
    os << '\n';
  };
  emit(cols);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void render(const Json& j, std::ostream& os, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), flat_object)) {
      os << indent << key << ":\n";
      render_table(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      os << indent << key << ":\n";
      for (const auto& item : v) os << indent << "  " << cell(item) << '\n';
    } else if (v.is_object() && !is_number_object(v)) {
      os << indent << key << ":\n";
      render(v, os, indent + "  ");
    } else {
      os << indent << key << ": " << cell(v) << '\n';
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicographic optima, lex bounds and formulations for bounded integer sets",
               "lexbound"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  std::uint64_t seed_value = 0;
  app.add_flag("--pretty", g.pretty, "Human-readable output instead of JSON");
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for randomized suites");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  LexoptArgs lx;
  auto* lexopt = app.add_subcommand("lexopt", "Lex maximum or minimum under a permutation");
  lexopt->add_option("--instance", lx.instance, "Instance JSON file")->required();
  lexopt->add_option("--perm", lx.perm, "Comma list (1-based), identity or reverse");
  lexopt->add_option("--dir", lx.dir)->check(CLI::IsMember({"max", "min"}));
  lexopt->add_option("--algo", lx.algo)->check(CLI::IsMember({"greedy", "bisect", "closed"}));
  lexopt->add_option("--constraints", lx.constraints, "JSON file of explicit lex constraints");

  BoundsArgs bd;
  auto* bounds = app.add_subcommand("bounds", "Lex primal and dual bounds");
  bounds->add_option("--instance", bd.instance)->required();
  bounds->add_option("--c", bd.c, "Objective as a comma list of rationals, or 'ones'")->required();
  bounds->add_option("--family", bd.family, "h1, h2, h3, all or file:PATH");
  bounds->add_flag("--ground-truth", bd.ground_truth, "Also compute z* by enumeration");

  StructureArgs st;
  auto* structure = app.add_subcommand("structure", "Maximal points and lex-ordered sets");
  structure->add_option("--instance", st.instance);
  structure->add_option("--op", st.op)
      ->required()
      ->check(CLI::IsMember({"maximal", "min-infeasible", "maxi-lexset", "is-lexordered",
                             "dual-tightness", "gen-simplices", "gen-kappa"}));
  structure->add_option("--perm", st.perm);
  structure->add_option("--theta", st.theta, "Threshold for maxi-lexset (default: lexmax)");
  structure->add_option("--family", st.family, "Family for dual-tightness");
  structure->add_option("--n", st.n);
  structure->add_option("--delta", st.delta);
  structure->add_option("--kappa", st.kappa);

  FormulateArgs fm;
  auto* formulate = app.add_subcommand("formulate", "Formulations of independence systems");
  formulate->add_option("--instance", fm.instance)->required();
  formulate->add_option("--kind", fm.kind)
      ->required()
      ->check(CLI::IsMember({"cover", "strengthened", "extended"}));
  formulate->add_flag("--verify", fm.verify, "Compare against enumeration");

  OracleArgs oc;
  auto* orc = app.add_subcommand("oracle", "Definitional answers by enumeration");
  orc->add_option("--instance", oc.instance)->required();
  orc->add_option("--op", oc.op)
      ->required()
      ->check(CLI::IsMember({"enumerate", "lexopt", "maximal", "min-infeasible", "optimum",
                             "lexset"}));
  orc->add_option("--perm", oc.perm);
  orc->add_option("--dir", oc.dir)->check(CLI::IsMember({"max", "min"}));
  orc->add_option("--c", oc.c);
  orc->add_option("--constraints", oc.constraints);

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Gap and ratio tables for the built-in families");
  bench->add_option("--family", bn.family)->check(CLI::IsMember({"simplices", "kappa"}));
  bench->add_option("--n", bn.n, "Range such as 4..6");
  bench->add_option("--delta", bn.delta);
  bench->add_option("--kappa", bn.kappa);
  bench->add_option("--c", bn.c);

  SelftestArgs sf;
  auto* selftest = app.add_subcommand("selftest", "Built-in sanity suite");
  selftest->add_option("--level", sf.level)->check(CLI::IsMember({"quick", "full"}));

  std::vector<const char*> argv{"lexbound"};
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  const bool seeded = seed_opt->count() > 0;
  const std::uint64_t seed = seeded ? seed_value : gen::fresh_seed();

  try {
    SolverOptions opt = options_from_environment();
    opt.jobs = g.jobs;
    Json report;
    bool ok = true;
    bool with_seed = false;
    if (lexopt->parsed()) {
      report = cmd_lexopt(lx, opt);
    } else if (bounds->parsed()) {
      report = cmd_bounds(bd, opt);
    } else if (structure->parsed()) {
      report = cmd_structure(st, opt);
    } else if (formulate->parsed()) {
      report = cmd_formulate(fm, opt);
    } else if (orc->parsed()) {
      report = cmd_oracle(oc, opt);
    } else if (bench->parsed()) {
      report = cmd_bench(bn, opt);
      with_seed = true;
    } else if (selftest->parsed()) {
      report = cmd_selftest(sf, seed, opt, ok);
      with_seed = true;
    }
    if (with_seed) {
      Json header;
      header["seed"] = seed;
      header.update(report);
      report = std::move(header);
    }
    if (g.pretty) {
      std::ostringstream text;
      render(report, text, "");
      out << text.str();
    } else {
      out << report.dump() << '\n';
    }
    return ok ? kExitOk : kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace lexbound
