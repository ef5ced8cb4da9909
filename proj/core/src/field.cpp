#include "nhpoly/field.hpp"

#include <vector>

namespace nhpoly {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto read_uint = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return BigInt(text.substr(start, pos - start));
  };
  BigInt num = read_uint("integer");
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_uint("denominator");
    if (den == 0) throw ParseError("zero denominator", pos - 1);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

std::string decimal_string(const Rational& value, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den, r = scaled % den;
  if (2 * r >= den) ++q;  // half away from zero
  std::string ds = q.str();
  if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out;
  if (neg && q != 0) out += '-';
  out += ds.substr(0, ds.size() - digits);
  if (digits > 0) {
    out += '.';
    out += ds.substr(ds.size() - digits);
  }
  return out;
}

std::string rational_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 mod_of(const BigInt& v, u64 p) {
  BigInt m = v % p;
  if (m < 0) m += p;
  return m.convert_to<u64>();
}

}  // namespace

FieldConfig FieldConfig::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }
  FieldConfig cfg;
  cfg.kind = Kind::Prime;
  cfg.p = p;
  return cfg;
}

FieldConfig FieldConfig::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw FieldError("bad field spec '" + text + "' (expected q or fp:<p>)");
    }
    return prime(std::stoull(num));
  }
  throw FieldError("bad field spec '" + text + "' (expected q or fp:<p>)");
}

std::string FieldConfig::to_string() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
}

FieldScalar FieldScalar::zero(const FieldConfig& cfg) {
  FieldScalar s;
  s.cfg_ = cfg;
  return s;
}

FieldScalar FieldScalar::one(const FieldConfig& cfg) {
  return from_integer(cfg, 1);
}

FieldScalar FieldScalar::from_integer(const FieldConfig& cfg, const BigInt& v) {
  FieldScalar s;
  s.cfg_ = cfg;
  if (cfg.kind == FieldConfig::Kind::Rationals) {
    s.rat_ = Rational(v);
  } else {
    s.rep_ = mod_of(v, cfg.p);
  }
  return s;
}

FieldScalar FieldScalar::from_rational(const FieldConfig& cfg, const Rational& v) {
  if (cfg.kind == FieldConfig::Kind::Rationals) {
    FieldScalar s;
    s.cfg_ = cfg;
    s.rat_ = v;
    return s;
  }
  FieldScalar num = from_integer(cfg, boost::multiprecision::numerator(v));
  FieldScalar den = from_integer(cfg, boost::multiprecision::denominator(v));
  return num / den;
}

bool FieldScalar::is_zero() const {
  return cfg_.kind == FieldConfig::Kind::Rationals ? rat_ == 0 : rep_ == 0;
}

bool FieldScalar::is_one() const {
  return cfg_.kind == FieldConfig::Kind::Rationals ? rat_ == 1 : rep_ == 1 % cfg_.p;
}

void FieldScalar::check_same(const FieldScalar& o) const {
  if (!(cfg_ == o.cfg_)) throw FieldError("mixed coefficient fields");
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s = *this;
  if (cfg_.kind == FieldConfig::Kind::Rationals) {
    s.rat_ = -rat_;
  } else {
    s.rep_ = rep_ == 0 ? 0 : cfg_.p - rep_;
  }
  return s;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s = *this;
  if (cfg_.kind == FieldConfig::Kind::Rationals) {
    s.rat_ = rat_ + o.rat_;
  } else {
    u64 v = rep_ + o.rep_;
    if (v >= cfg_.p || v < rep_) v -= cfg_.p;  // also handles u64 wrap
    s.rep_ = v;
  }
  return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  return *this + (-o);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s = *this;
  if (cfg_.kind == FieldConfig::Kind::Rationals) {
    s.rat_ = rat_ * o.rat_;
  } else {
    s.rep_ = mulmod(rep_, o.rep_, cfg_.p);
  }
  return s;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  FieldScalar s = *this;
  if (cfg_.kind == FieldConfig::Kind::Rationals) {
    s.rat_ = Rational(1) / rat_;
  } else {
    s.rep_ = powmod(rep_, cfg_.p - 2, cfg_.p);
  }
  return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (!(cfg_ == o.cfg_)) return false;
  return cfg_.kind == FieldConfig::Kind::Rationals ? rat_ == o.rat_
                                                   : rep_ == o.rep_;
}

const Rational& FieldScalar::rational_value() const {
  if (cfg_.kind != FieldConfig::Kind::Rationals) {
    throw FieldError("not a rational scalar");
  }
  return rat_;
}

std::uint64_t FieldScalar::prime_value() const {
  if (cfg_.kind != FieldConfig::Kind::Prime) {
    throw FieldError("not a prime-field scalar");
  }
  return rep_;
}

namespace {

// Exact integer e-th root: returns r with r^e == v, if it exists (v >= 0).
std::optional<BigInt> exact_root(const BigInt& v, unsigned e) {
  if (v == 0) return BigInt(0);
  if (v == 1) return BigInt(1);
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, e) < v) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, e) < v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (boost::multiprecision::pow(lo, e) == v) return lo;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<FieldScalar>> FieldScalar::nth_roots(unsigned e) const {
  if (e == 0) throw FieldError("0-th root is undefined");
  std::vector<FieldScalar> roots;
  if (cfg_.kind == FieldConfig::Kind::Rationals) {
    if (rat_ == 0) {
      roots.push_back(zero(cfg_));
      return roots;
    }
    const bool neg = rat_ < 0;
    if (neg && e % 2 == 0) return roots;  // no real (a fortiori rational) root
    const Rational a = neg ? Rational(-rat_) : rat_;
    auto rn = exact_root(boost::multiprecision::numerator(a), e);
    auto rd = exact_root(boost::multiprecision::denominator(a), e);
    if (rn && rd) {
      Rational r(*rn, *rd);
      if (neg) r = -r;
      roots.push_back(from_rational(cfg_, r));
      if (!neg && e % 2 == 0) roots.push_back(from_rational(cfg_, -r));
    }
    return roots;
  }
  // F_p: exhaustive search stays exact and is fine at small p.
  if (cfg_.p > (1u << 16)) return std::nullopt;
  for (u64 x = 0; x < cfg_.p; ++x) {
    if (powmod(x, e, cfg_.p) == rep_) {
      FieldScalar s = zero(cfg_);
      s.rep_ = x;
      roots.push_back(s);
    }
  }
  return roots;
}

std::string FieldScalar::to_string() const {
  if (cfg_.kind == FieldConfig::Kind::Rationals) return rational_string(rat_);
  return std::to_string(rep_);
}

}  // namespace nhpoly
