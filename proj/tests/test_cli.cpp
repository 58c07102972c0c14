#include "doctest.h"

#include "cli.hpp"
#include "generators.hpp"

#include "gramcalc/bijection.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/json_io.hpp"

#include <algorithm>
#include <sstream>

using namespace gramcalc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("triangle csv ends with the last D^6(a) coefficient") {
  const Result r = run({"triangle", "--stat", "updown", "--n", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("n,k,count\n1,1,1\n"));
  CHECK(r.out.ends_with("6,1,1\n6,2,31\n6,3,148\n6,4,268\n6,5,211\n6,6,61\n"));
  const Result rec = run({"triangle", "--stat", "updownrun", "--n", "6", "--method", "recurrence", "--format", "csv"});
  CHECK(rec.out == r.out);
}

TEST_CASE("triangle table and json") {
  const Result t = run({"triangle", "--stat", "leftpeak", "--n", "4"});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "leftpeak (brute)\n"
        "n\\k  0  1  2\n"
        "  1  1      \n"
        "  2  1  1   \n"
        "  3  1  5   \n"
        "  4  1 18  5\n");
  const Json j = run_json({"triangle", "--stat", "exteriorpeak", "--n", "5"});
  REQUIRE(j["triangles"].size() == 5);
  for (int m = 1; m <= 5; ++m) CHECK(triangle_from_json(j["triangles"][m - 1]) == triangle(StatKind::exteriorpeak, m));
}

TEST_CASE("derive and series") {
  Result r = run({"derive", "--grammar", "run", "--seed", "a", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "a*x*y^3 + 7*a*x^2*y^2 + 11*a*x^3*y + 5*a*x^4\n");
  r = run({"derive", "--grammar", "inline:x->x*y; y->x^2", "--seed", "x", "--n", "3"});
  CHECK(r.out == "x*y^3 + 5*x^3*y\n");
  r = run({"derive", "--grammar", "peak", "--seed", "x", "--n", "2", "--chain"});
  CHECK(r.out == "0: x\n1: x*y\n2: x*y^2 + x^3\n");

  const Json d = run_json({"derive", "--grammar", "euler", "--seed", "x", "--n", "5"});
  CHECK(poly_from_json(d["result"]) == derive_n(Grammar::preset("euler"), LaurentPoly::var(Var::x), 5));

  const Json s = run_json({"series", "--formula", "genx", "--order", "7"});
  CHECK(series_from_json(s["series"]) == closed_form("genx", 7));
  const Json g = run_json({"series", "--formula", "gen", "--grammar", "peak", "--seed", "y", "--order", "6"});
  CHECK(series_from_json(g["series"]) == closed_form("geny", 6));
}

TEST_CASE("labelings and decompositions") {
  Result r = run({"label", "--scheme", "a", "--perm", "1,5,4,6,7,3,9,8,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 y 1 x 5 x 4 y 6 x 7 x 3 x 9 x 8 y 2 a\nweight: a*x^6*y^3\n");
  const Json l = run_json({"label", "--scheme", "l", "--perm", "3,1,2"});
  CHECK(l["labels"].size() == 4);
  r = run({"decompose", "--kind", "lw", "--perm", "2,6,1,3,8,4,7,9,5"});
  CHECK(r.out.starts_with("2 6 1 | 3 | 8 4 | 7 9 5\n"));
  r = run({"decompose", "--kind", "al", "--perm", "3,1,2", "--format", "json"});
  CHECK(r.code == 0);
}

TEST_CASE("biject on the worked example") {
  const Json j = run_json({"biject", "--map", "updown", "--perm", "1,5,4,6,7,3,9,8,2"});
  CHECK(j["tree"]["n"] == 9);
  CHECK(j["tree"]["parent"] == Json::parse("[0,1,0,2,3,3,6,2,2]"));
  CHECK(j["statistics"]["perm"]["value"] == j["statistics"]["tree"]["transported"]);
  CHECK(j["weight"]["perm"] == j["weight"]["tree"]);

  const Result t = run({"biject", "--map", "updown", "--perm", "1,5,4,6,7,3,9,8,2", "--trace"});
  CHECK(t.out.starts_with("0,1,0,2,3,3,6,2,2\n"));
  CHECK(t.out.find("i | sigma^(i) with labeling | weight | substitution\n") != std::string::npos);

  const Result inv = run({"biject", "--map", "unified", "--tree", "[0,0,2,1,0,2]"});
  CHECK(inv.out.starts_with("6,2,4,3,1,5\n"));
}

TEST_CASE("biject round trip through the command line") {
  testing::PolyGen gen(20261019);
  constexpr const char* kMaps[] = {"updown", "leftpeak", "exterior", "unified"};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform(1, 8);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), gen.engine());
    const Permutation p(v);
    const std::string map = kMaps[trial % 4];
    CAPTURE(p.to_string());
    CAPTURE(map);

    const Json fwd = run_json({"biject", "--map", map, "--perm", p.to_string()});
    const IncreasingTree t = tree_from_json(fwd["tree"]);
    CHECK(t == phi(bijection_from_name(map), p));
    const Json back = run_json({"biject", "--map", map, "--tree", fwd["tree"].dump()});
    CHECK(permutation_from_json(back["perm"]) == p);
    const Json back2 = run_json({"biject", "--map", map, "--tree", t.to_string()});
    CHECK(back2 == back);
  }
}

TEST_CASE("verify") {
  Result r = run({"verify", "--suite", "eq-WW,thm-ma", "--nmax", "6", "--order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("2/2 passed\n"));

  const Json j = run_json({"verify", "--suite", "eq-LA,eq-bg", "--nmax", "5", "--order", "6"});
  REQUIRE(j.size() == 2);
  const IdentityCheck c = check_from_json(j[0]);
  const IdentityCheck expect = verify("eq-LA", {5, 6});
  CHECK(c.id == expect.id);
  CHECK(c.pass);
  CHECK(c.detail == expect.detail);
  CHECK(to_json(c) == j[0]);

  r = run({"verify", "--suite", "all", "--nmax", "7", "--order", "10"});
  CHECK(r.code == 0);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::string> args{"biject", "--map", "leftpeak", "--perm", "6,2,4,3,1,5", "--trace", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"triangle", "--stat", "updown"}).code == 2);
  CHECK(run({"triangle", "--stat", "nope", "--n", "3"}).code == 2);
  CHECK(run({"triangle", "--stat", "leftpeak", "--n", "3", "--method", "recurrence"}).code == 2);
  CHECK(run({"triangle", "--stat", "updown", "--n", "3", "--bogus"}).code == 2);
  CHECK(run({"biject", "--map", "updown"}).code == 2);
  CHECK(run({"biject", "--map", "updown", "--perm", "1,2", "--tree", "0,0"}).code == 2);
  CHECK(run({"biject", "--map", "updown", "--perm", "1,1"}).code == 2);
  CHECK(run({"biject", "--map", "updown", "--tree", "0,2"}).code == 2);
  CHECK(run({"derive", "--grammar", "nope", "--seed", "x", "--n", "2"}).code == 2);
  CHECK(run({"series", "--formula", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "eq-nope"}).code == 2);
  CHECK(run({"verify", "--nmax", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
