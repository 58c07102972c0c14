#include "doctest.h"

#include "gramcalc/bijection.hpp"
#include "gramcalc/permstat.hpp"

#include <set>

using namespace gramcalc;

namespace {

const IncreasingTree kFit({0, 1, 0, 2, 3, 3, 6, 2, 2});
const IncreasingTree kEven({0, 0, 1, 0, 4, 1, 6, 4, 6});
const IncreasingTree kFlw({0, 0, 2, 1, 0, 2});

constexpr BijectionKind kKinds[] = {BijectionKind::updown, BijectionKind::leftpeak, BijectionKind::exterior,
                                    BijectionKind::unified};

Permutation perm(std::string_view s) { return Permutation::parse(s); }

}  // namespace

TEST_CASE("worked examples") {
  CHECK(phi(BijectionKind::updown, perm("1,5,4,6,7,3,9,8,2")) == kFit);
  CHECK(phi(BijectionKind::updown, perm("1,2")) == IncreasingTree({0, 1}));
  CHECK(phi(BijectionKind::updown, perm("2,1")) == IncreasingTree({0, 0}));
  CHECK(phi(BijectionKind::updown, perm("3,2,9,6,7,1,8,4,5")) == kEven);
  CHECK(unified_reflection(perm("6,2,4,3,1,5")) == kFlw);
  CHECK(phi(BijectionKind::leftpeak, perm("6,2,4,3,1,5")) == kFlw);
  CHECK(phi(BijectionKind::exterior, perm("6,2,4,3,1,5")) == kFlw);
  CHECK(unified_reflection(perm("1")) == IncreasingTree({0}));
  CHECK(phi(BijectionKind::updown, Permutation()) == IncreasingTree());

  CHECK(phi_inverse(BijectionKind::updown, kFit) == perm("1,5,4,6,7,3,9,8,2"));
  CHECK(phi_inverse(BijectionKind::updown, IncreasingTree({0, 0})) == perm("2,1"));
  CHECK(phi_inverse(BijectionKind::leftpeak, kFit) == perm("1,5,4,6,7,3,9,8,2"));
  CHECK(phi_inverse(BijectionKind::unified, kFlw) == perm("6,2,4,3,1,5"));
}

TEST_CASE("the worked insertion table") {
  const auto trace = phi_trace(BijectionKind::updown, perm("1,5,4,6,7,3,9,8,2"));
  CHECK(render_trace(trace) ==
        "i | sigma^(i) with labeling | weight | substitution\n"
        "2 | 0 y 1 [a] 2 x | a*x*y | a->a*x\n"
        "3 | 0 y 1 [x] 3 x 2 a | a*x^2*y | x->x*y\n"
        "4 | 0 y 1 [x] 4 x 3 y 2 a | a*x^2*y^2 | x->x*y\n"
        "5 | 0 y 1 x 5 x 4 [y] 3 y 2 a | a*x^2*y^3 | y->x^2\n"
        "6 | 0 y 1 x 5 x 4 x 6 [x] 3 y 2 a | a*x^4*y^2 | x->x*y\n"
        "7 | 0 y 1 x 5 x 4 y 6 x 7 x 3 [y] 2 a | a*x^4*y^3 | y->x^2\n"
        "8 | 0 y 1 x 5 x 4 y 6 x 7 x 3 [x] 8 x 2 a | a*x^6*y^2 | x->x*y\n"
        "9 | 0 y 1 x 5 x 4 y 6 x 7 x 3 x 9 x 8 y 2 a | a*x^6*y^3 | \n");
  CHECK(trace.steps.size() == 8);
  CHECK(trace.steps.front().parent == 1);
}

TEST_CASE("attach_vertex guards its position") {
  CHECK_THROWS_AS(attach_vertex(BijectionKind::updown, perm("1,2"), 4), std::out_of_range);
  CHECK_THROWS_AS(bijection_from_name("kpp"), std::invalid_argument);
}

TEST_CASE("bijectivity, transport and round trip") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    for (BijectionKind kind : kKinds) {
      CAPTURE(bijection_name(kind));
      std::set<IncreasingTree> image;
      bool transport = true;
      bool round_trip = true;
      for_each_permutation(n, [&](const Permutation& s) {
        const IncreasingTree t = phi(kind, s);
        image.insert(t);
        switch (kind) {
          case BijectionKind::updown:
            transport &= stat(StatKind::updownrun, s) == even_nonroot_count(t);
            break;
          case BijectionKind::leftpeak:
            transport &= even_vertex_count(t) == 2 * stat(StatKind::leftpeak, s) + 1;
            break;
          case BijectionKind::exterior:
          case BijectionKind::unified:
            transport &= stat(StatKind::exteriorpeak, s) == (even_nonroot_count(t) + 1) / 2;
            break;
        }
        round_trip &= phi_inverse(kind, t) == s;
      });
      CHECK(image.size() == all_trees(n).size());
      CHECK(transport);
      CHECK(round_trip);
    }
  }
}

TEST_CASE("all kinds agree with the up-down map on S_6") {
  for_each_permutation(6, [](const Permutation& s) {
    const IncreasingTree t = phi(BijectionKind::updown, s);
    CHECK(unified_reflection(s) == t);
    CHECK(phi(BijectionKind::leftpeak, s) == t);
    CHECK(phi(BijectionKind::exterior, s) == t);
  });
}

TEST_CASE("down-up permutations go to even trees") {
  for (int n = 1; n <= 7; ++n) {
    BigInt even = 0;
    bool matches = true;
    for_each_permutation(n, [&](const Permutation& s) {
      const bool e = is_even_tree(phi(BijectionKind::updown, s));
      matches &= e == is_down_up(s);
      even += e ? 1 : 0;
    });
    CHECK(matches);
    CHECK(even == lambda_recurrence_row(n)[static_cast<std::size_t>(n)]);
  }
}
