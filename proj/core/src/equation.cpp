#include "nhpoly/equation.hpp"

#include "nhpoly/errors.hpp"
#include "nhpoly/parser.hpp"

namespace nhpoly {

std::vector<ExponentVector> support_violations(const MultiPoly& poly) {
  std::vector<ExponentVector> out;
  const int n = poly.z_degree();
  if (n < 0) return out;
  for (const auto& [e, c] : poly.terms()) {
    if (static_cast<int>(e.total_degree()) < n) out.push_back(e);
  }
  return out;
}

WeierstrassEquation WeierstrassEquation::from_polynomial(const MultiPoly& poly) {
  const int n = poly.z_degree();
  if (n < 1) {
    throw ValidationError("not monic of the form Z^n + lower Z-terms: no Z^n term");
  }
  // The entire Z^n coefficient must be the constant 1.
  for (const auto& [e, c] : poly.terms()) {
    if (e.k == static_cast<std::uint32_t>(n)) {
      if (e.x_degree() != 0) {
        throw ValidationError(
            "not monic of the form Z^n + lower Z-terms: term " + e.to_string() +
            " multiplies Z^" + std::to_string(n));
      }
      if (!c.is_one()) {
        throw ValidationError(
            "not monic of the form Z^n + lower Z-terms: Z^" + std::to_string(n) +
            " has coefficient " + c.to_string());
      }
    }
  }
  auto bad = support_violations(poly);
  if (!bad.empty()) {
    throw ValidationError("support condition violated at exponent vector " +
                          bad.front().to_string() + ": i_1+...+i_m+k < n");
  }
  return WeierstrassEquation(poly, static_cast<unsigned>(n));
}

WeierstrassEquation WeierstrassEquation::parse(const std::string& text,
                                               const FieldConfig& field,
                                               std::optional<int> m_override) {
  return from_polynomial(parse_polynomial(text, field, m_override));
}

SupportSet WeierstrassEquation::support() const {
  SupportSet s;
  ExponentVector lead;
  lead.i.assign(m(), 0);
  lead.k = n_;
  for (const auto& [e, c] : poly_.terms()) {
    s.full.push_back(e);
    if (!(e == lead)) s.reduced.push_back(e);
  }
  return s;
}

SubstitutionResult substitute_z(const WeierstrassEquation& f,
                                const MultiPoly& alpha) {
  if (alpha.depends_on_z()) {
    throw ValidationError("substitution polynomial must not involve Z");
  }
  if (alpha.has_constant_term()) {
    throw ValidationError("substitution polynomial must have zero constant term");
  }
  SubstitutionResult r;
  r.raw = f.polynomial().substitute_z_shift(alpha);
  r.violations = support_violations(r.raw);
  if (r.violations.empty()) {
    r.equation = WeierstrassEquation::from_polynomial(r.raw);
  }
  return r;
}

WeierstrassEquation tchirnhausen(const WeierstrassEquation& f) {
  const FieldConfig& cfg = f.field();
  const FieldScalar n_scalar =
      FieldScalar::from_integer(cfg, BigInt(f.n()));
  if (n_scalar.is_zero()) {
    throw FieldError("n = " + std::to_string(f.n()) +
                     " is not invertible in characteristic " +
                     std::to_string(cfg.characteristic()));
  }
  MultiPoly a_top = f.coefficient_of_z(f.n() - 1);
  MultiPoly alpha =
      -(a_top * MultiPoly::constant(f.m(), cfg, n_scalar.inverse()));
  SubstitutionResult r = substitute_z(f, alpha);
  if (!r.ok()) {
    // Unreachable for ord(alpha) >= 1 substitutions; keep the guard honest.
    throw InternalError("Tchirnhausen transform broke the support condition");
  }
  return *r.equation;
}

}  // namespace nhpoly
