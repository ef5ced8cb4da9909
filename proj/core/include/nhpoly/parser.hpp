#ifndef NHPOLY_PARSER_HPP
#define NHPOLY_PARSER_HPP

#include <optional>
#include <string>

#include "nhpoly/polynomial.hpp"

namespace nhpoly {

// Recursive-descent parser for polynomial expressions in Z, X_1..X_m.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*          (juxtaposition multiplies)
//   factor := base ('^' uint)?
//   base   := var | rational | '(' expr ')'
//   var    := 'Z' | 'X' uint? | 'Y'          (X,Y aliases for m <= 2)
//
// Rational literals are "p" or "p/q" with q a directly adjacent integer.
// Whitespace is insensitive. Products and powers of sums are expanded
// eagerly over the exact field.
//
// m is inferred from the variables present (Y counts as X_2) unless
// m_override is given; an equation with no X variables defaults to m = 1.
MultiPoly parse_polynomial(const std::string& text, const FieldConfig& field,
                           std::optional<int> m_override = std::nullopt);

}  // namespace nhpoly

#endif
