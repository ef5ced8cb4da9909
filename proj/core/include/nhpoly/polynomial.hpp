#ifndef NHPOLY_POLYNOMIAL_HPP
#define NHPOLY_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nhpoly/field.hpp"

namespace nhpoly {

// Exponent vector of a monomial X_1^{i_1}...X_m^{i_m} Z^k.
struct ExponentVector {
  std::vector<std::uint32_t> i;
  std::uint32_t k = 0;

  std::uint32_t total_degree() const {
    std::uint32_t t = k;
    for (auto e : i) t += e;
    return t;
  }
  std::uint32_t x_degree() const {
    std::uint32_t t = 0;
    for (auto e : i) t += e;
    return t;
  }
  bool operator==(const ExponentVector&) const = default;
  std::string to_string() const;  // e.g. "(1,2;k=1)"
};

// Graded lexicographic order with Z last: total degree first, then the
// X exponents left to right, then k. Canonical term order throughout.
struct GradedLexZLast {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    auto ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    if (a.i != b.i) return a.i < b.i;
    return a.k < b.k;
  }
};

// Sparse multivariate polynomial in X_1..X_m, Z over a fixed field.
// No zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, FieldScalar, GradedLexZLast>;

  MultiPoly() = default;
  MultiPoly(int m, FieldConfig field) : m_(m), field_(field) {}

  static MultiPoly zero(int m, const FieldConfig& field) {
    return MultiPoly(m, field);
  }
  static MultiPoly constant(int m, const FieldConfig& field,
                            const FieldScalar& c);
  static MultiPoly monomial(int m, const FieldConfig& field,
                            const ExponentVector& e, const FieldScalar& c);

  int m() const { return m_; }
  const FieldConfig& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Z-degree, -1 when zero.
  int z_degree() const;
  FieldScalar coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const FieldScalar& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;

  bool depends_on_z() const;
  bool has_constant_term() const;

  // Coefficient of Z^k, as a polynomial with k = 0 everywhere.
  MultiPoly z_coefficient(std::uint32_t k) const;

  // F(X, Z + alpha) for alpha with k = 0 exponents only.
  MultiPoly substitute_z_shift(const MultiPoly& alpha) const;

  // Canonical, parseable rendering. Highest graded-lex term first.
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int m_ = 1;
  FieldConfig field_{};
  TermMap terms_;
};

// Variable name for index v (0-based): X/Y for m <= 2, else X1..Xm.
std::string variable_name(int v, int m);

}  // namespace nhpoly

#endif
