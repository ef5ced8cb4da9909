#include <doctest.h>

#include "nhpoly/upoly.hpp"

using namespace nhpoly;

namespace {
IntPoly P(std::initializer_list<long> cs) {
  IntPoly p;
  for (long c : cs) p.emplace_back(c);
  return ipoly_trim(std::move(p));
}
}  // namespace

TEST_CASE("polynomial gcd and exact division") {
  // (t-1)(t+2) and (t-1)(t-3)
  IntPoly a = ipoly_mul(P({-1, 1}), P({2, 1}));
  IntPoly b = ipoly_mul(P({-1, 1}), P({-3, 1}));
  CHECK(ipoly_gcd(a, b) == P({-1, 1}));
  CHECK(ipoly_div_exact(a, P({-1, 1})) == P({2, 1}));
  CHECK(ipoly_gcd(P({}), P({4, 2})) == P({2, 1}));
  CHECK(ipoly_gcd(P({6}), P({4})) == P({1}));
  CHECK_THROWS_AS(ipoly_div_exact(P({1, 1}), P({0, 1})), InternalError);
}

TEST_CASE("squarefree part") {
  // (t-2)^3 (t+1)
  IntPoly p = ipoly_mul(ipoly_mul(P({-2, 1}), P({-2, 1})),
                        ipoly_mul(P({-2, 1}), P({1, 1})));
  IntPoly s = ipoly_squarefree_part(p);
  CHECK(s == ipoly_mul(P({-2, 1}), P({1, 1})));
}

TEST_CASE("rational roots") {
  // 6t^3 - 5t^2 - 2t + 1 = (3t - 1)(2t + 1)(t - 1) -> roots 1/3, -1/2, 1
  IntPoly p = ipoly_mul(ipoly_mul(P({-1, 3}), P({1, 2})), P({-1, 1}));
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-1, 2));
  CHECK(roots[1] == Rational(1, 3));
  CHECK(roots[2] == Rational(1));
  CHECK(rational_roots(P({0, 0, 1})) == std::vector<Rational>{Rational(0)});
  CHECK(rational_roots(P({-2, 0, 1})).empty());  // t^2 - 2
}

TEST_CASE("positive root isolation: exact rational roots") {
  // roots 2 (linear), and {1/2, 3} for a quadratic
  auto r1 = isolate_positive_roots(P({-2, 1}), Rational(10));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].exact);
  CHECK(r1[0].value == Rational(2));

  IntPoly q = ipoly_mul(P({-1, 2}), P({-3, 1}));  // (2t-1)(t-3)
  auto r2 = isolate_positive_roots(q, Rational(10));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].value == Rational(1, 2));
  CHECK(r2[1].value == Rational(3));

  // qmax cuts off roots
  auto r3 = isolate_positive_roots(q, Rational(1));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].value == Rational(1, 2));

  // negative roots are ignored
  CHECK(isolate_positive_roots(P({2, 1}), Rational(10)).empty());
}

TEST_CASE("positive root isolation: irrational roots get intervals") {
  // t^2 - 2: root sqrt(2) in (1, 2)
  auto roots = isolate_positive_roots(P({-2, 0, 1}), Rational(10));
  REQUIRE(roots.size() == 1);
  CHECK(!roots[0].exact);
  CHECK(roots[0].lo < roots[0].hi);
  CHECK(roots[0].lo * roots[0].lo < 2);
  CHECK(roots[0].hi * roots[0].hi > 2);

  // (t^2 - 2)(t - 1): mixed exact and irrational
  IntPoly p = ipoly_mul(P({-2, 0, 1}), P({-1, 1}));
  auto mixed = isolate_positive_roots(p, Rational(10));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].exact);
  CHECK(mixed[0].value == 1);
  CHECK(!mixed[1].exact);
}

TEST_CASE("root multiplicity does not produce duplicates") {
  // (t - 3)^2
  IntPoly p = ipoly_mul(P({-3, 1}), P({-3, 1}));
  auto roots = isolate_positive_roots(p, Rational(10));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].value == Rational(3));
}

TEST_CASE("RootSet merges equal roots across polynomials") {
  RootSet rs;
  rs.add_roots(P({-2, 0, 1}), Rational(10));            // sqrt(2)
  rs.add_roots(ipoly_mul(P({-2, 0, 1}), P({-1, 1})), Rational(10));
  rs.add_roots(P({-1, 1}), Rational(10));               // 1 again
  rs.add_roots(P({-3, 0, 1}), Rational(10));            // sqrt(3)
  auto sorted = rs.sorted();
  REQUIRE(sorted.size() == 3);  // 1, sqrt2, sqrt3
  CHECK(sorted[0].exact);
  CHECK(sorted[0].value == 1);
  CHECK(!sorted[1].exact);
  CHECK(!sorted[2].exact);
  // pairwise separated
  CHECK(sorted[0].upper() < sorted[1].lower());
  CHECK(sorted[1].upper() < sorted[2].lower());
  // lower bounds strictly positive
  CHECK(sorted[1].lower() > 0);
}

TEST_CASE("sturm-based isolation counts all roots of a wilkinson-ish product") {
  // (t-1)(t-2)(t-3)(t-4)
  IntPoly p = P({1});
  for (long r = 1; r <= 4; ++r) p = ipoly_mul(p, P({-r, 1}));
  auto roots = isolate_positive_roots(p, Rational(10));
  REQUIRE(roots.size() == 4);
  for (long r = 1; r <= 4; ++r) {
    CHECK(roots[r - 1].exact);
    CHECK(roots[r - 1].value == Rational(r));
  }
}
