#ifndef NHPOLY_EQUATION_HPP
#define NHPOLY_EQUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "nhpoly/polynomial.hpp"

namespace nhpoly {

// Support of a Weierstrass equation: `full` = N(F), `reduced` = N*(F)
// (N(F) minus the leading (0,...,0,n)). Sorted in the canonical term order.
struct SupportSet {
  std::vector<ExponentVector> full;
  std::vector<ExponentVector> reduced;
};

// A validated equation Z^n + sum_{k<n} a_k(X) Z^k whose every term
// satisfies i_1+...+i_m+k >= n.
class WeierstrassEquation {
 public:
  // Validates monicity, the absence of k > n terms beyond Z^n, and the
  // support condition; throws ValidationError with the offending exponent
  // vector in the message.
  static WeierstrassEquation from_polynomial(const MultiPoly& poly);

  static WeierstrassEquation parse(const std::string& text,
                                   const FieldConfig& field,
                                   std::optional<int> m_override = std::nullopt);

  int m() const { return poly_.m(); }
  unsigned n() const { return n_; }
  const FieldConfig& field() const { return poly_.field(); }
  const MultiPoly& polynomial() const { return poly_; }

  SupportSet support() const;
  // a_k(X_1..X_m) as a Z-free polynomial.
  MultiPoly coefficient_of_z(std::uint32_t k) const {
    return poly_.z_coefficient(k);
  }

  std::string to_string() const { return poly_.to_string(); }
  bool operator==(const WeierstrassEquation& o) const {
    return poly_ == o.poly_;
  }

 private:
  WeierstrassEquation(MultiPoly poly, unsigned n)
      : poly_(std::move(poly)), n_(n) {}

  MultiPoly poly_;
  unsigned n_ = 0;
};

// Returns exponent vectors violating i_1+...+i_m+k >= z_degree(poly).
std::vector<ExponentVector> support_violations(const MultiPoly& poly);

// Outcome of F(X, Z + alpha). The raw expanded polynomial is always
// available; `equation` is present only when the result still satisfies
// the Weierstrass invariants. A violation is reported, and the invalid
// result cannot flow into polytope construction (which takes equations).
struct SubstitutionResult {
  MultiPoly raw;
  std::optional<WeierstrassEquation> equation;
  std::vector<ExponentVector> violations;

  bool ok() const { return equation.has_value(); }
};

// Z -> Z + alpha; alpha must be Z-free with zero constant term.
SubstitutionResult substitute_z(const WeierstrassEquation& f,
                                const MultiPoly& alpha);

// Z -> Z - a_{n-1}/n; requires n invertible in the coefficient field.
WeierstrassEquation tchirnhausen(const WeierstrassEquation& f);

}  // namespace nhpoly

#endif
