#ifndef NHPOLY_UPOLY_HPP
#define NHPOLY_UPOLY_HPP

#include <vector>

#include "nhpoly/rational.hpp"

namespace nhpoly {

// Dense univariate polynomials with integer coefficients, ascending
// degree, no high-order zero coefficients. The zero polynomial is {}.
using IntPoly = std::vector<BigInt>;

IntPoly ipoly_trim(IntPoly p);
int ipoly_degree(const IntPoly& p);  // -1 for zero
bool ipoly_is_zero(const IntPoly& p);
const BigInt& ipoly_leading(const IntPoly& p);
const BigInt& ipoly_trailing(const IntPoly& p);  // lowest nonzero coefficient

IntPoly ipoly_neg(const IntPoly& p);
IntPoly ipoly_add(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_sub(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_scale(const IntPoly& p, const BigInt& c);
IntPoly ipoly_derivative(const IntPoly& p);

BigInt ipoly_content(const IntPoly& p);            // >= 0; 0 only for zero
IntPoly ipoly_primitive(const IntPoly& p);         // content removed, sign kept
Rational ipoly_eval(const IntPoly& p, const Rational& x);

// Exact division; throws InternalError if b does not divide a.
IntPoly ipoly_div_exact(const IntPoly& a, const IntPoly& b);

// Primitive-PRS gcd, normalized to positive leading coefficient.
// gcd(0,0) = 0.
IntPoly ipoly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'); primitive, positive leading coefficient.
IntPoly ipoly_squarefree_part(const IntPoly& p);

// One real root of a squarefree polynomial, either exact or isolated to
// an open interval (lo, hi) with a sign change and no other root.
struct IsolatedRoot {
  bool exact = false;
  Rational value;    // exact only
  Rational lo, hi;   // interval only
  // Set when the rational-root search had to be skipped (coefficient
  // factorization exceeded its bound), so "interval" does not certify
  // irrationality.
  bool rationality_unverified = false;

  Rational sample() const { return exact ? value : (lo + hi) / 2; }
  Rational upper() const { return exact ? value : hi; }
  Rational lower() const { return exact ? value : lo; }
};

// All rational roots of p (any sign, no multiplicities), sorted.
// Throws InternalError if the coefficient factorization exceeds the
// trial-division budget.
std::vector<Rational> rational_roots(const IntPoly& p);

// All real roots of p in (0, qmax], sorted increasing. p must be nonzero.
// Exact rational roots are reported exactly; the rest as isolating
// intervals contained in (0, qmax + 1).
std::vector<IsolatedRoot> isolate_positive_roots(const IntPoly& p,
                                                 const Rational& qmax);

// Sorted set of distinct positive algebraic numbers accumulated from the
// roots of many polynomials. Intervals are refined until all entries are
// pairwise separated; equal roots arriving from different polynomials are
// merged (via gcd when both sides are intervals).
class RootSet {
 public:
  // Adds all roots of p in (0, qmax].
  void add_roots(const IntPoly& p, const Rational& qmax);
  // Distinct roots, sorted increasing, intervals pairwise disjoint.
  std::vector<IsolatedRoot> sorted() const;

 private:
  struct Entry {
    IsolatedRoot root;
    IntPoly poly;  // squarefree witness for interval entries
  };
  void insert(IsolatedRoot r, const IntPoly& witness);
  std::vector<Entry> entries_;
};

}  // namespace nhpoly

#endif
