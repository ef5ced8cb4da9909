#include "nhpoly/polynomial.hpp"

#include <sstream>

#include "nhpoly/errors.hpp"

namespace nhpoly {

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t l = 0; l < i.size(); ++l) {
    if (l) os << ',';
    os << i[l];
  }
  os << ";k=" << k << ')';
  return os.str();
}

MultiPoly MultiPoly::constant(int m, const FieldConfig& field,
                              const FieldScalar& c) {
  MultiPoly p(m, field);
  ExponentVector e;
  e.i.assign(m, 0);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::monomial(int m, const FieldConfig& field,
                              const ExponentVector& e, const FieldScalar& c) {
  if (static_cast<int>(e.i.size()) != m) {
    throw ValidationError("exponent vector has wrong dimension");
  }
  MultiPoly p(m, field);
  p.add_term(e, c);
  return p;
}

int MultiPoly::z_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.k));
  return d;
}

FieldScalar MultiPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldScalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, const FieldScalar& c) {
  if (static_cast<int>(e.i.size()) != m_) {
    throw ValidationError("exponent vector has wrong dimension");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (m_ != o.m_ || !(field_ == o.field_)) {
    throw ValidationError("polynomials over different variable sets or fields");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(m_, field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(m_, field_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExponentVector e;
      e.i.resize(m_);
      for (int l = 0; l < m_; ++l) e.i[l] = ea.i[l] + eb.i[l];
      e.k = ea.k + eb.k;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(m_, field_, FieldScalar::one(field_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return m_ == o.m_ && field_ == o.field_ && terms_ == o.terms_;
}

bool MultiPoly::depends_on_z() const {
  for (const auto& [e, c] : terms_) {
    if (e.k > 0) return true;
  }
  return false;
}

bool MultiPoly::has_constant_term() const {
  ExponentVector zero_e;
  zero_e.i.assign(m_, 0);
  return terms_.count(zero_e) > 0;
}

MultiPoly MultiPoly::z_coefficient(std::uint32_t k) const {
  MultiPoly r(m_, field_);
  for (const auto& [e, c] : terms_) {
    if (e.k == k) {
      ExponentVector f = e;
      f.k = 0;
      r.add_term(f, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::substitute_z_shift(const MultiPoly& alpha) const {
  check_compatible(alpha);
  if (alpha.depends_on_z()) {
    throw ValidationError("substitution polynomial must not involve Z");
  }
  const int n = z_degree();
  // Precompute (Z + alpha)^k for all needed k.
  MultiPoly z = monomial(m_, field_, ExponentVector{std::vector<std::uint32_t>(m_, 0), 1},
                         FieldScalar::one(field_));
  std::vector<MultiPoly> shifted;
  shifted.push_back(constant(m_, field_, FieldScalar::one(field_)));
  MultiPoly base = z + alpha;
  for (int k = 1; k <= std::max(n, 0); ++k) {
    shifted.push_back(shifted.back() * base);
  }
  MultiPoly r(m_, field_);
  for (const auto& [e, c] : terms_) {
    ExponentVector xe = e;
    xe.k = 0;
    r = r + MultiPoly::monomial(m_, field_, xe, c) * shifted[e.k];
  }
  return r;
}

std::string variable_name(int v, int m) {
  if (m <= 2) return v == 0 ? "X" : "Y";
  return "X" + std::to_string(v + 1);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    first = false;

    std::vector<std::string> factors;
    for (int l = 0; l < m_; ++l) {
      if (e.i[l] == 0) continue;
      std::string f = variable_name(l, m_);
      if (e.i[l] > 1) f += "^" + std::to_string(e.i[l]);
      factors.push_back(f);
    }
    if (e.k > 0) {
      std::string f = "Z";
      if (e.k > 1) f += "^" + std::to_string(e.k);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << '*';
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) os << '*';
      os << factors[f];
    }
  }
  return os.str();
}

}  // namespace nhpoly
