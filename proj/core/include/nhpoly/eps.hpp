#ifndef NHPOLY_EPS_HPP
#define NHPOLY_EPS_HPP

#include <compare>
#include <string>

#include "nhpoly/upoly.hpp"

namespace nhpoly {

// An element of the ordered field Q(eps): num/den with integer-coefficient
// polynomials in eps. Canonical form: gcd(num,den) = 1 over Q[eps],
// gcd(content(num), content(den)) = 1, and the lowest-degree nonzero
// coefficient of den is positive. Equality is equality of canonical forms.
//
// Two orders are supported: the infinitesimal order (sign of a(eps) for all
// sufficiently small eps > 0 = sign of the lowest-order coefficients) and
// evaluation at a concrete positive rational.
class EpsNumber {
 public:
  EpsNumber() : num_{}, den_{BigInt(1)} {}
  EpsNumber(const Rational& r);  // NOLINT implicit by design
  EpsNumber(long v) : EpsNumber(Rational(v)) {}

  static EpsNumber epsilon();
  // Canonicalizes; throws FieldError on zero denominator.
  static EpsNumber fraction(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  EpsNumber operator-() const;
  EpsNumber operator+(const EpsNumber& o) const;
  EpsNumber operator-(const EpsNumber& o) const;
  EpsNumber operator*(const EpsNumber& o) const;
  EpsNumber operator/(const EpsNumber& o) const;  // throws on /0
  EpsNumber& operator+=(const EpsNumber& o) { return *this = *this + o; }
  EpsNumber& operator-=(const EpsNumber& o) { return *this = *this - o; }
  EpsNumber& operator*=(const EpsNumber& o) { return *this = *this * o; }

  bool operator==(const EpsNumber& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const EpsNumber& o) const { return !(*this == o); }

  // Sign for all sufficiently small eps > 0.
  int sign_infinitesimal() const;
  // Exact sign of the value at eps = q; throws PoleError at poles.
  int sign_at(const Rational& q) const;
  Rational evaluate(const Rational& q) const;

  // Strict total order key; used only for deterministic output ordering.
  std::strong_ordering order_key(const EpsNumber& o) const;

  std::string to_string() const;  // e.g. "(4e)/(8+6e+e^2)"

 private:
  void normalize();

  IntPoly num_, den_;
};

// Sign context: the canonical infinitesimal order, or evaluation at a
// concrete positive rational q (q >= 1 is allowed deliberately and
// flagged by consumers that care).
struct OrderingContext {
  enum class Mode { Infinitesimal, At };

  Mode mode = Mode::Infinitesimal;
  Rational q;

  static OrderingContext infinitesimal() { return {}; }
  static OrderingContext at(const Rational& q);

  bool operator==(const OrderingContext&) const = default;
  std::string to_string() const;
};

int sign(const EpsNumber& a, const OrderingContext& ctx);
int compare(const EpsNumber& a, const EpsNumber& b, const OrderingContext& ctx);

// Correctly rounded decimal rendering of a(q).
std::string to_decimal(const EpsNumber& a, const Rational& q, unsigned digits);

}  // namespace nhpoly

#endif
