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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexbound/cli.hpp"
#include "lexbound/errors.hpp"
#include "lexbound/json_io.hpp"
#include "lexbound/random_instances.hpp"
#include "lexbound/structure.hpp"
#include "support/oracles.hpp"

using namespace lexbound;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  args.insert(args.begin(), "lexbound");
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) {
  return std::string(LEXBOUND_TEST_DATA) + "/" + name;
}

// Writes text to a fresh file under the temp directory and returns its path.
std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lexbound_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("lexopt on the knapsack example") {
  const auto r = run({"lexopt", "--instance", data("knapsack.json"), "--perm", "identity"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"point\":[1,1,1,1,2]}\n");
  CHECK(r.err.empty());

  const auto b = run({"lexopt", "--instance", data("knapsack.json"), "--algo", "bisect"});
  REQUIRE(b.code == kExitOk);
  const auto j = Json::parse(b.out);
  CHECK(j["point"] == Json::parse("[1,1,1,1,2]"));
  // 1 + sum of ceil(log2(u_i + 1)) over u = (1,5,4,1,2).
  CHECK(j["feasibility_calls"].get<int>() <= 1 + 1 + 3 + 3 + 1 + 2);

  const auto mn = run({"lexopt", "--instance", data("knapsack.json"), "--dir", "min"});
  CHECK(Json::parse(mn.out)["point"] == Json::parse("[0,0,0,0,0]"));
}

TEST_CASE("closed forms through the command line") {
  const auto p = run({"lexopt", "--instance", data("rank2.json"), "--algo", "closed", "--perm", "3,1,2"});
  REQUIRE(p.code == kExitOk);
  const auto g = run({"lexopt", "--instance", data("rank2.json"), "--perm", "3,1,2"});
  CHECK(p.out == g.out);
  const auto refused = run({"lexopt", "--instance", data("hard_equality.json"), "--algo", "closed"});
  CHECK(refused.code == kExitDomain);
  CHECK(refused.out.empty());
}

TEST_CASE("exit codes and error output") {
  auto r = run({"lexopt", "--instance", data("missing.json")});
  CHECK(r.code == kExitDomain);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  r = run({"lexopt", "--instance", data("knapsack.json"), "--bogus"});
  CHECK(r.code == kExitDomain);
  CHECK(r.out.empty());

  r = run({"lexopt", "--instance", data("knapsack.json"), "--perm", "1,2,3"});
  CHECK(r.code == kExitDomain);

  r = run({"lexopt", "--instance", data("hard_equality.json")});
  CHECK(r.code == kExitDomain);  // infeasible
  CHECK(r.out.empty());

  ::setenv("LEXBOUND_NODE_CAP", "10", 1);
  r = run({"lexopt", "--instance", data("hard_equality.json")});
  ::unsetenv("LEXBOUND_NODE_CAP");
  CHECK(r.code == kExitResource);
  CHECK(r.out.empty());
  CHECK(r.err.find("resource") != std::string::npos);

  CHECK(run({}).code == kExitDomain);
  std::ostringstream sink;
  CHECK(run_cli({}, sink, sink) == kExitDomain);
  CHECK(run({"frobnicate"}).code == kExitDomain);
}

TEST_CASE("parse errors name the offending field") {
  auto path = temp_file("bad_edge.json",
                        R"({"n":3,"box":{"lower":[0,0,0],"upper":[1,1,1]},)"
                        R"("body":{"type":"indep_graph","edges":[[1,2],[1,7]]}})");
  auto r = run({"structure", "--instance", path, "--op", "maximal"});
  CHECK(r.code == kExitDomain);
  CHECK(r.out.empty());
  CHECK(r.err.find("/body/edges/1/1") != std::string::npos);

  path = temp_file("bad_box.json", R"({"n":2,"box":{"lower":[0,0],"upper":[1]},)"
                                   R"("body":{"type":"point_list","points":[]}})");
  r = run({"oracle", "--instance", path, "--op", "enumerate"});
  CHECK(r.code == kExitDomain);
  CHECK(r.err.find("/box/upper") != std::string::npos);

  path = temp_file("bad_rational.json",
                   R"({"n":1,"box":{"lower":[0],"upper":[3]},)"
                   R"("body":{"type":"linear","A":[["1/0"]],"b":["2"]}})");
  r = run({"lexopt", "--instance", path});
  CHECK(r.code == kExitDomain);
  CHECK(r.err.find("/body/A/0/0") != std::string::npos);

  path = temp_file("not_json.json", "{\"n\": 3,");
  r = run({"lexopt", "--instance", path});
  CHECK(r.code == kExitDomain);
  CHECK(r.out.empty());
}

TEST_CASE("same seed, same output") {
  const std::vector<std::string> args{"--seed", "17", "selftest", "--level", "full"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto j = Json::parse(a.out);
  CHECK(j["seed"] == 17);
  CHECK(j["passed"] == true);

  // Another seed changes only the seed field and the instance-dependent results.
  const auto other = Json::parse(run({"--seed", "18", "selftest", "--level", "full"}).out);
  CHECK(other["seed"] == 18);
  CHECK(other["results"].size() == j["results"].size());
  for (std::size_t i = 0; i < j["results"].size(); ++i) {
    CHECK(other["results"][i]["name"] == j["results"][i]["name"]);
  }

  // Without --seed a fresh one is drawn and reported.
  const auto fresh = Json::parse(run({"selftest", "--level", "quick"}).out);
  CHECK(fresh["seed"].is_number_unsigned());

  const std::vector<std::string> bench{"--seed", "4", "bench", "--family", "kappa", "--n", "3",
                                       "--kappa", "2..4"};
  CHECK(run(bench).out == run(bench).out);
}

TEST_CASE("subcommands produce the documented shapes") {
  auto r = run({"bounds", "--instance", data("knapsack.json"), "--c", "2,8,40,150,310",
                "--family", "h1", "--ground-truth"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["z_star"]["exact"] == "822");
  CHECK(j["z_prim"]["exact"] == "822");
  CHECK(j["z_dual"]["exact"] == "822");
  CHECK(j["family"] == "h1");

  r = run({"structure", "--instance", data("triangle.json"), "--op", "min-infeasible"});
  j = Json::parse(r.out);
  CHECK(j["count"] == 3);

  r = run({"structure", "--instance", data("knapsack.json"), "--op", "is-lexordered"});
  CHECK(Json::parse(r.out)["lex_ordered"] == true);

  r = run({"formulate", "--instance", data("triangle.json"), "--kind", "strengthened", "--verify"});
  j = Json::parse(r.out);
  CHECK(j["verified"] == true);

  r = run({"oracle", "--instance", data("triangle.json"), "--op", "enumerate"});
  CHECK(Json::parse(r.out)["count"] == 4);

  r = run({"bench", "--family", "simplices", "--n", "4", "--delta", "2", "--seed", "1"});
  REQUIRE(r.code == kExitOk);
  j = Json::parse(r.out);
  CHECK(j["rows"][0]["z_star"]["exact"] == "4");
  CHECK(j["rows"][0]["z_dual"]["exact"] == "5");

  r = run({"--pretty", "oracle", "--instance", data("triangle.json"), "--op", "enumerate"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("instance JSON round trip for every body type") {
  gen::Rng rng(701);
  std::vector<SetInstance> all;
  for (int t = 0; t < 4; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    all.push_back(gen::linear(rng, n, 3, 2));
    all.push_back(gen::sign_separated(rng, n, 3, 2));
    all.push_back(gen::knapsack(rng, n, 3));
    all.push_back(gen::graph(rng, n + 1, 0.5));
    all.push_back(polymatroid_instance(gen::coverage_submodular(rng, n)));
    all.push_back(polymatroid_instance(gen::concave_submodular(rng, n, 2)));
    all.push_back(gen::point_cloud(rng, n, 2));
    const IntBox box = gen::box(rng, n, 3);
    all.push_back(SetInstance(box, ExplicitLexSet{{gen::lex_constraint(rng, box)}}));
  }
  all.push_back(kappa_family_instance(3, 2).instance);
  std::set<std::string> types;
  for (const auto& inst : all) {
    types.insert(std::string(inst.body_type()));
    const Json j = instance_to_json(inst);
    const SetInstance back = instance_from_json(Json::parse(j.dump()));
    CHECK(instance_to_json(back) == j);
    CHECK(back.monotonicity() == inst.monotonicity());
    for (const auto& x : testing::all_box_points(inst.box())) {
      REQUIRE(contains(back, x) == contains(inst, x));
    }
  }
  CHECK(types.size() == 8);
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("identity", 3) == Permutation::identity(3));
  CHECK(parse_permutation("reverse", 3).to_one_based() == std::vector<std::int64_t>{3, 2, 1});
  CHECK(parse_permutation("2,3,1", 3).to_one_based() == std::vector<std::int64_t>{2, 3, 1});
  CHECK_THROWS_AS(parse_permutation("1,1,2", 3), DomainError);
  CHECK_THROWS_AS(parse_permutation("0,1,2", 3), DomainError);
  CHECK_THROWS_AS(parse_permutation("1,2", 3), DomainError);
  CHECK_THROWS_AS(parse_permutation("a,b,c", 3), DomainError);
  CHECK(parse_rational_list("1/2, -3") == RationalVector{Rational(1, 2), Rational(-3)});
}

TEST_CASE("selftest through the command line") {
  const auto r = run({"--seed", "2", "selftest", "--level", "quick"});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["results"].size() >= 20);
}
