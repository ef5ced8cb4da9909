#ifndef NHPOLY_FIELD_HPP
#define NHPOLY_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "nhpoly/rational.hpp"

namespace nhpoly {

// Per-equation coefficient field: the rationals or a prime field F_p.
struct FieldConfig {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // modulus, Prime only

  static FieldConfig rationals() { return FieldConfig{}; }
  // Validates primality (throws FieldError otherwise).
  static FieldConfig prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static FieldConfig parse(const std::string& text);

  std::uint64_t characteristic() const {
    return kind == Kind::Prime ? p : 0;
  }
  bool operator==(const FieldConfig&) const = default;
  std::string to_string() const;
};

// An exact scalar in the configured field. Rationals are kept in lowest
// terms; F_p representatives lie in [0, p-1].
class FieldScalar {
 public:
  FieldScalar() = default;  // zero over Q

  static FieldScalar zero(const FieldConfig& cfg);
  static FieldScalar one(const FieldConfig& cfg);
  static FieldScalar from_integer(const FieldConfig& cfg, const BigInt& v);
  static FieldScalar from_rational(const FieldConfig& cfg, const Rational& v);

  const FieldConfig& config() const { return cfg_; }
  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator-() const;
  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;  // throws on /0
  FieldScalar inverse() const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Rationals only.
  const Rational& rational_value() const;
  // Prime fields only; canonical representative.
  std::uint64_t prime_value() const;

  // All e-th roots of this scalar within the base field, exactly.
  // For F_p with p > 2^16 root search is refused (nullopt = "unresolvable");
  // an empty vector means "provably no root in the base field".
  std::optional<std::vector<FieldScalar>> nth_roots(unsigned e) const;

  std::string to_string() const;  // parseable by the equation lexer

 private:
  void check_same(const FieldScalar& o) const;

  FieldConfig cfg_{};
  Rational rat_{};        // Rationals
  std::uint64_t rep_ = 0;  // Prime
};

}  // namespace nhpoly

#endif
