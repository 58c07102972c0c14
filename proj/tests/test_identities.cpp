#include "doctest.h"

#include "gramcalc/grammar.hpp"
#include "gramcalc/identities.hpp"
#include "gramcalc/permstat.hpp"

#include <algorithm>
#include <set>

using namespace gramcalc;

namespace {

// Every in-scope identity must have a check.
const std::vector<std::string> kRequired = {
    "eq-LW-1",   "eq-WW",       "eq-WL",          "ode-system",         "ode-single", "eq-bg",
    "x2n",       "eq-Genx",     "eq-xy",          "eq-x-1-y-3",         "eq-yxt",     "eq-M-y",
    "gessel",    "david-barton", "eq-GLW-3",      "eq-LW-sp",           "thm-ma",     "eq-an-r",
    "eq-RA",     "eq-AL-1",     "al-decomposition", "eq-gen-at",        "eq-A-L-W",   "eq-LA",
    "eq-MA",     "eq-AM",       "eq-UV",          "eq-DAM",             "eq-SF",      "gen-a-closed",
    "grammar-H", "thm-ud",      "thm-bijection",  "thm-L-I",            "thm-W-I",    "down-up-even-trees",
};

}  // namespace

TEST_CASE("registry covers the required ids") {
  const auto& ids = identity_ids();
  for (const auto& id : kRequired) {
    CAPTURE(id);
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK_FALSE(identity_description(id).empty());
  }
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
}

TEST_CASE("every check passes at default parameters") {
  const auto checks = verify_all();
  REQUIRE(checks.size() == identity_ids().size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CAPTURE(checks[i].id);
    CAPTURE(checks[i].witness);
    CHECK(checks[i].id == identity_ids()[i]);
    CHECK(checks[i].pass);
    CHECK(checks[i].witness.empty());
    CHECK_FALSE(checks[i].detail.empty());
    CHECK(checks[i].params.n_max == 8);
    CHECK(checks[i].params.order == 12);
  }
}

TEST_CASE("checks pass at small parameters") {
  for (const auto& id : identity_ids()) {
    CAPTURE(id);
    const auto c = verify(id, {3, 4});
    CAPTURE(c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("worked examples") {
  CHECK(verify("eq-A-L-W", {6, 12}).pass);

  CHECK(verify("eq-LA", {6, 12}).pass);
  const auto lambda3 = lambda_recurrence_row(3);
  CHECK(triangle(StatKind::leftpeak, 3).count(1) == 5);
  CHECK(lambda3[2] + lambda3[3] == 5);
  CHECK(derive_n(Grammar::preset("peak"), LaurentPoly::var(Var::x), 3) == parse_poly("x*y^3 + 5*x^3*y"));

  CHECK(verify("thm-ma", {6, 12}).pass);
  const auto row5 = derive_n(Grammar::preset("run"), LaurentPoly::var(Var::a), 5);
  CHECK(row5 == parse_poly("a*x*y^4 + 15*a*x^2*y^3 + 43*a*x^3*y^2 + 45*a*x^4*y + 16*a*x^5"));
  const auto t5 = triangle(StatKind::updownrun, 5);
  CHECK(std::vector<BigInt>(t5.counts.begin() + 1, t5.counts.begin() + 6) == std::vector<BigInt>{1, 15, 43, 45, 16});
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(verify("eq-nope"), std::invalid_argument);
  CHECK_THROWS_AS(identity_description("eq-nope"), std::invalid_argument);
  CHECK_THROWS_AS(verify("eq-WW", {0, 12}), std::invalid_argument);
  CHECK_THROWS_AS(verify("eq-LW-1", {8, -1}), std::invalid_argument);
}
