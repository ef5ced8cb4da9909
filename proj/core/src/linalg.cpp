#include "nhpoly/linalg.hpp"

#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {

// Row-reduces in place; returns pivot column per pivot row.
std::vector<int> row_reduce(EpsMatrix& a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    EpsNumber inv = EpsNumber(Rational(1)) / a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      EpsNumber f = a[r][col];
      for (int c = col; c < cols; ++c) {
        a[r][c] = a[r][c] - f * a[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(EpsMatrix a) {
  if (a.empty()) return 0;
  return static_cast<int>(row_reduce(a, static_cast<int>(a[0].size())).size());
}

std::vector<EpsVector> nullspace(const EpsMatrix& a_in, int cols) {
  EpsMatrix a = a_in;
  std::vector<int> pivots = a.empty() ? std::vector<int>{} : row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<EpsVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    EpsVector v(cols, EpsNumber());
    v[free] = EpsNumber(Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -a[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

EpsNumber dot(const EpsVector& a, const EpsVector& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  EpsNumber s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

EpsNumber determinant(EpsMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InternalError("determinant of non-square matrix");
  }
  EpsNumber det{Rational(1)};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return EpsNumber();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    EpsNumber inv = EpsNumber(Rational(1)) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      EpsNumber f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = a[r][c] - f * a[col][c];
      }
    }
  }
  return det;
}

std::vector<EpsVector> rational_orthogonal_space(const EpsMatrix& a, int cols) {
  // A rational row vector y satisfies y . row = 0 over Q(eps) iff it
  // annihilates every eps-coefficient of the row once denominators are
  // cleared. Build the stacked rational constraint matrix.
  EpsMatrix constraints;
  for (const auto& row : a) {
    // Clear denominators across the row.
    IntPoly common = {BigInt(1)};
    for (const auto& x : row) common = ipoly_mul(common, x.den());
    std::vector<IntPoly> cleared;
    int max_deg = -1;
    for (const auto& x : row) {
      IntPoly c = ipoly_mul(x.num(), ipoly_div_exact(common, x.den()));
      max_deg = std::max(max_deg, ipoly_degree(c));
      cleared.push_back(std::move(c));
    }
    for (int d = 0; d <= max_deg; ++d) {
      EpsVector cons(cols, EpsNumber());
      bool nonzero = false;
      for (int c = 0; c < cols; ++c) {
        const IntPoly& pc = cleared[c];
        BigInt coeff = d <= ipoly_degree(pc) ? pc[d] : BigInt(0);
        if (coeff != 0) nonzero = true;
        cons[c] = EpsNumber(Rational(coeff));
      }
      if (nonzero) constraints.push_back(std::move(cons));
    }
  }
  return nullspace(constraints, cols);
}

}  // namespace nhpoly
