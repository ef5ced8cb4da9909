#ifndef NHPOLY_LINALG_HPP
#define NHPOLY_LINALG_HPP

#include <vector>

#include "nhpoly/eps.hpp"

namespace nhpoly {

// Exact dense linear algebra over the field Q(eps). Zero tests are exact
// field-zero tests (canonical form empty numerator), which is the right
// notion for both the infinitesimal order and rational-constant data.

using EpsVector = std::vector<EpsNumber>;
using EpsMatrix = std::vector<EpsVector>;

int rank(EpsMatrix a);

// Basis of {x : a x = 0}. Deterministic (free variables in column order).
std::vector<EpsVector> nullspace(const EpsMatrix& a, int cols);

EpsNumber dot(const EpsVector& a, const EpsVector& b);

// Exact determinant of a square matrix (Gaussian elimination over Q(eps)).
EpsNumber determinant(EpsMatrix a);

// Rank of the set of rational-coefficient row vectors orthogonal to all
// rows of `a` (the "rational normal space"): each Q(eps) entry is expanded
// into per-eps-degree rational constraints. Returns a basis of that space
// as vectors over Q (encoded as constant EpsNumbers).
std::vector<EpsVector> rational_orthogonal_space(const EpsMatrix& a, int cols);

}  // namespace nhpoly

#endif
