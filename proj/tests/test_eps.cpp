#include <doctest.h>

#include <random>

#include "nhpoly/eps.hpp"

using namespace nhpoly;

namespace {

EpsNumber frac(std::initializer_list<long> num, std::initializer_list<long> den) {
  IntPoly n, d;
  for (long c : num) n.emplace_back(c);
  for (long c : den) d.emplace_back(c);
  return EpsNumber::fraction(std::move(n), std::move(d));
}

std::mt19937_64 rng(42);

EpsNumber random_eps(int depth = 0) {
  auto coef = [&] { return static_cast<long>(rng() % 7) - 3; };
  IntPoly n{BigInt(coef()), BigInt(coef())};
  IntPoly d{BigInt(coef()), BigInt(coef())};
  d = ipoly_trim(std::move(d));
  if (ipoly_is_zero(d)) d = {BigInt(1)};
  return EpsNumber::fraction(ipoly_trim(std::move(n)), std::move(d));
}

}  // namespace

TEST_CASE("field operation examples") {
  EpsNumber a = frac({1}, {2, 1});  // 1/(2+e)
  CHECK(a + a == frac({2}, {2, 1}));

  // 8/(4+e) - 4/(2+e) = 4e/((4+e)(2+e))
  EpsNumber b = frac({8}, {4, 1}) - frac({4}, {2, 1});
  CHECK(b == frac({0, 4}, {8, 6, 1}));
  CHECK(b.num() == IntPoly{BigInt(0), BigInt(4)});
  CHECK(b.den() == IntPoly{BigInt(8), BigInt(6), BigInt(1)});

  // (2-e) * 1/(2+e) = (2-e)/(2+e)
  CHECK(frac({2, -1}, {1}) * frac({1}, {2, 1}) == frac({2, -1}, {2, 1}));
}

TEST_CASE("canonical form") {
  // common factor cancels
  CHECK(frac({0, 2}, {0, 4}) == EpsNumber(Rational(1, 2)));
  // denominator trailing coefficient positive
  EpsNumber x = frac({1}, {-2, -1});
  CHECK(x.den()[0] > 0);
  CHECK(x.sign_infinitesimal() == -1);
  // content gcd(num, den) = 1 but value-preserving
  EpsNumber y = frac({4, 4}, {2});
  CHECK(y == frac({2, 2}, {1}));
  CHECK_THROWS_AS(EpsNumber::fraction({BigInt(1)}, {}), FieldError);
}

TEST_CASE("signs in both contexts") {
  EpsNumber b = frac({8}, {4, 1}) - frac({4}, {2, 1});
  CHECK(sign(b, OrderingContext::infinitesimal()) == 1);

  // (2-e)/((2+e)^2(3+e)): positive infinitesimally, negative at e=3
  EpsNumber det = frac({2, -1}, {1}) /
                  (frac({2, 1}, {1}) * frac({2, 1}, {1}) * frac({3, 1}, {1}));
  CHECK(sign(det, OrderingContext::infinitesimal()) == 1);
  CHECK(sign(det, OrderingContext::at(Rational(3))) == -1);
  CHECK(sign(det, OrderingContext::at(Rational(2))) == 0);

  CHECK(sign(EpsNumber(), OrderingContext::infinitesimal()) == 0);
  CHECK(EpsNumber::epsilon().sign_infinitesimal() == 1);
  CHECK((EpsNumber(Rational(1)) - EpsNumber::epsilon()).sign_infinitesimal() == 1);
}

TEST_CASE("pole detection") {
  EpsNumber x = frac({1}, {-2, 1});  // 1/(e-2)
  CHECK_THROWS_AS(x.evaluate(Rational(2)), PoleError);
  CHECK(x.sign_at(Rational(3)) == 1);
}

TEST_CASE("decimal rendering examples") {
  EpsNumber v = frac({4}, {2, 1});
  CHECK(to_decimal(v, Rational(2, 7), 6) == "1.750000");
  EpsNumber w = frac({1}, {2, 1});
  CHECK(to_decimal(w, Rational(3), 6) == "0.200000");
  CHECK(to_decimal(EpsNumber(), Rational(5), 6) == "0.000000");
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(frac({1}, {1}) / EpsNumber(), FieldError);
}

TEST_CASE("degree cap guards against misuse") {
  EpsNumber e = EpsNumber::epsilon();
  EpsNumber big = e;
  for (int i = 0; i < 6; ++i) big = big * big;  // e^64
  CHECK_THROWS_AS(big * e, FieldError);
}

TEST_CASE("field axioms on random elements") {
  for (int trial = 0; trial < 200; ++trial) {
    EpsNumber a = random_eps(), b = random_eps(), c = random_eps();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == EpsNumber());
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * (EpsNumber(Rational(1)) / b) == EpsNumber(Rational(1)));
    }
    CHECK(a - b == -(b - a));
  }
}

TEST_CASE("total order in every context") {
  auto ctxs = {OrderingContext::infinitesimal(), OrderingContext::at(Rational(1, 3))};
  for (int trial = 0; trial < 100; ++trial) {
    EpsNumber a = random_eps(), b = random_eps();
    for (const auto& ctx : ctxs) {
      int lt = compare(a, b, ctx) < 0;
      int eq = compare(a, b, ctx) == 0;
      int gt = compare(a, b, ctx) > 0;
      CHECK(lt + eq + gt == 1);
      if (eq && ctx.mode == OrderingContext::Mode::Infinitesimal) {
        CHECK(a == b);  // infinitesimal equality is field equality
      }
    }
  }
}

TEST_CASE("order consistency: infinitesimal sign is the sign at small q") {
  int verified = 0;
  for (int trial = 0; trial < 120; ++trial) {
    EpsNumber a = random_eps();
    int s = a.sign_infinitesimal();
    if (s == 0) continue;
    // q0 from root isolation of num*den: below the first positive root,
    // the sign is constant.
    IntPoly prod = ipoly_mul(a.num(), a.den());
    auto roots = isolate_positive_roots(prod, Rational(1));
    Rational q0(1);
    if (!roots.empty()) q0 = roots.front().lower();
    if (q0 <= 0) continue;
    Rational q = q0 / 2;
    for (int step = 0; step < 4; ++step) {
      CHECK(a.sign_at(q) == s);
      q /= 3;
    }
    ++verified;
  }
  CHECK(verified > 50);
}

TEST_CASE("projection injectivity as eps-tuples") {
  // Distinct (i, k) pairs give distinct i/(n-k+e) values unless i = i' and
  // k = k'; the field sees this exactly.
  const unsigned n = 5;
  std::vector<EpsNumber> seen;
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 1; i <= 6; ++i) {
      EpsNumber v = frac({static_cast<long>(i)}, {static_cast<long>(n - k), 1});
      for (const auto& other : seen) CHECK(!(v == other));
      seen.push_back(v);
    }
  }
}
