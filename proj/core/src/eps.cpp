#include "nhpoly/eps.hpp"

#include <sstream>

#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {
// Legitimate predicates stay at eps-degree <= m+1; anything larger is a
// misuse of the field.
constexpr int kDegreeCap = 64;
}  // namespace

EpsNumber::EpsNumber(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  if (n != 0) num_ = {n};
  den_ = {d};
}

EpsNumber EpsNumber::epsilon() {
  EpsNumber e;
  e.num_ = {BigInt(0), BigInt(1)};
  e.den_ = {BigInt(1)};
  return e;
}

EpsNumber EpsNumber::fraction(IntPoly num, IntPoly den) {
  EpsNumber e;
  e.num_ = ipoly_trim(std::move(num));
  e.den_ = ipoly_trim(std::move(den));
  if (ipoly_is_zero(e.den_)) throw FieldError("zero denominator in Q(eps)");
  e.normalize();
  return e;
}

void EpsNumber::normalize() {
  if (ipoly_is_zero(num_)) {
    den_ = {BigInt(1)};
    return;
  }
  IntPoly g = ipoly_gcd(num_, den_);
  if (ipoly_degree(g) >= 1 || ipoly_content(g) > 1) {
    num_ = ipoly_div_exact(num_, g);
    den_ = ipoly_div_exact(den_, g);
  }
  BigInt cn = ipoly_content(num_);
  BigInt cd = ipoly_content(den_);
  BigInt c = boost::multiprecision::gcd(cn, cd);
  if (c > 1) {
    for (auto& x : num_) x /= c;
    for (auto& x : den_) x /= c;
  }
  if (ipoly_trailing(den_) < 0) {
    num_ = ipoly_neg(num_);
    den_ = ipoly_neg(den_);
  }
  if (ipoly_degree(num_) > kDegreeCap || ipoly_degree(den_) > kDegreeCap) {
    throw FieldError("eps-degree exceeds cap " + std::to_string(kDegreeCap));
  }
}

bool EpsNumber::is_constant() const {
  return ipoly_degree(num_) <= 0 && ipoly_degree(den_) == 0;
}

Rational EpsNumber::constant_value() const {
  if (!is_constant()) throw FieldError("EpsNumber is not a rational constant");
  if (num_.empty()) return Rational(0);
  return Rational(num_[0], den_[0]);
}

EpsNumber EpsNumber::operator-() const {
  EpsNumber r = *this;
  r.num_ = ipoly_neg(r.num_);
  return r;
}

EpsNumber EpsNumber::operator+(const EpsNumber& o) const {
  EpsNumber r;
  r.num_ = ipoly_add(ipoly_mul(num_, o.den_), ipoly_mul(o.num_, den_));
  r.den_ = ipoly_mul(den_, o.den_);
  r.normalize();
  return r;
}

EpsNumber EpsNumber::operator-(const EpsNumber& o) const { return *this + (-o); }

EpsNumber EpsNumber::operator*(const EpsNumber& o) const {
  EpsNumber r;
  r.num_ = ipoly_mul(num_, o.num_);
  r.den_ = ipoly_mul(den_, o.den_);
  r.normalize();
  return r;
}

EpsNumber EpsNumber::operator/(const EpsNumber& o) const {
  if (o.is_zero()) throw FieldError("division by zero in Q(eps)");
  EpsNumber r;
  r.num_ = ipoly_mul(num_, o.den_);
  r.den_ = ipoly_mul(den_, o.num_);
  r.normalize();
  return r;
}

int EpsNumber::sign_infinitesimal() const {
  if (num_.empty()) return 0;
  const int sn = ipoly_trailing(num_) < 0 ? -1 : 1;
  const int sd = ipoly_trailing(den_) < 0 ? -1 : 1;
  return sn * sd;
}

Rational EpsNumber::evaluate(const Rational& q) const {
  Rational d = ipoly_eval(den_, q);
  if (d == 0) {
    throw PoleError("pole of Q(eps) element at eps = " + rational_string(q));
  }
  return ipoly_eval(num_, q) / d;
}

int EpsNumber::sign_at(const Rational& q) const {
  return evaluate(q).sign();
}

std::strong_ordering EpsNumber::order_key(const EpsNumber& o) const {
  auto cmp_poly = [](const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  };
  auto c = cmp_poly(num_, o.num_);
  if (c != std::strong_ordering::equal) return c;
  return cmp_poly(den_, o.den_);
}

namespace {

std::string poly_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] == 0) continue;
    BigInt c = p[d];
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    }
    first = false;
    if (d == 0) {
      os << c.str();
    } else {
      if (c != 1) os << c.str() << '*';
      os << 'e';
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

}  // namespace

std::string EpsNumber::to_string() const {
  if (is_constant()) return rational_string(constant_value());
  return "(" + poly_string(num_) + ")/(" + poly_string(den_) + ")";
}

OrderingContext OrderingContext::at(const Rational& q) {
  if (q <= 0) throw ValidationError("concrete epsilon must be positive");
  OrderingContext c;
  c.mode = Mode::At;
  c.q = q;
  return c;
}

std::string OrderingContext::to_string() const {
  return mode == Mode::Infinitesimal ? "infinitesimal"
                                     : "at " + rational_string(q);
}

int sign(const EpsNumber& a, const OrderingContext& ctx) {
  return ctx.mode == OrderingContext::Mode::Infinitesimal
             ? a.sign_infinitesimal()
             : a.sign_at(ctx.q);
}

int compare(const EpsNumber& a, const EpsNumber& b, const OrderingContext& ctx) {
  return sign(a - b, ctx);
}

std::string to_decimal(const EpsNumber& a, const Rational& q, unsigned digits) {
  return decimal_string(a.evaluate(q), digits);
}

}  // namespace nhpoly
