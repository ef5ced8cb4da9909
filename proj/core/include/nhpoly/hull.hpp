#ifndef NHPOLY_HULL_HPP
#define NHPOLY_HULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "nhpoly/linalg.hpp"
#include "nhpoly/polynomial.hpp"

namespace nhpoly {

// Which polytope is being built: the classical one (exact rational
// coordinates, no eps), the blurred one (infinitesimal order on Q(eps)),
// or a concrete perturbation eps = q.
struct PolytopeContext {
  enum class Mode { Classical, Infinitesimal, At };

  Mode mode = Mode::Infinitesimal;
  Rational q;

  static PolytopeContext classical() {
    return {Mode::Classical, Rational(0)};
  }
  static PolytopeContext infinitesimal() { return {}; }
  static PolytopeContext at(const Rational& q);

  bool operator==(const PolytopeContext&) const = default;
  std::string to_string() const;
};

// A point of the projected support with full provenance: every exponent
// vector of N*(F) that maps to these coordinates under the active
// projection/context.
struct ProjectedPoint {
  EpsVector coords;
  std::vector<ExponentVector> provenance;
};

// normal . x >= offset on the polytope. For facets, `generators` are the
// incident input points and `rays` the axis directions contained in the
// facet. Rational-constant normals are scaled to coprime nonnegative
// integers; eps-dependent normals are scaled so their first nonzero
// component is 1.
struct FacetInequality {
  EpsVector normal;
  EpsNumber offset;
  std::vector<int> generators;
  std::vector<int> rays;
  bool compact = false;  // all normal components > 0
};

struct Face {
  int dim = 0;
  std::vector<int> generators;     // input points on the face
  std::vector<int> rays;           // axis directions in the recession cone
  std::vector<int> facet_indices;  // facets containing the face
  bool compact = false;
};

// P = conv(points) + R_{>=0}^m over the context's ordered field.
// `faces` is the full face lattice (compact and unbounded, graded by
// dimension, closed under intersection); facets appear both in `facets`
// and as (m-1)-faces. The empty polytope (N*(F) = {}) is the
// distinguished value with `empty` set.
struct NHPolytope {
  PolytopeContext context;
  int m = 0;
  bool empty = true;
  std::vector<ProjectedPoint> points;
  std::vector<int> vertex_indices;
  std::vector<FacetInequality> facets;
  std::vector<Face> faces;
  std::vector<std::string> warnings;

  std::vector<int> compact_face_indices() const;
  // Number of compact faces of each dimension 0..m-1.
  std::vector<int> compact_face_counts() const;
  int find_face(const std::vector<int>& generators,
                const std::vector<int>& rays) const;  // -1 if absent
  // Union of generator provenance, sorted.
  std::vector<ExponentVector> face_provenance(int face_index) const;
};

// Builds P from projected points. At-mode coordinates are evaluated at q
// first and coinciding points are merged (provenance union). Points must
// have nonnegative coordinates in the context order.
NHPolytope orthant_hull(std::vector<ProjectedPoint> points,
                        const PolytopeContext& context);

enum class MembershipKind { Interior, Boundary, Outside };

struct MembershipResult {
  MembershipKind kind = MembershipKind::Outside;
  int face_index = -1;  // smallest face containing x, Boundary only
};

MembershipResult membership(const NHPolytope& p, const EpsVector& x);

// Recomputes the compact face lattice with an independent brute-force
// oracle (supporting-hyperplane feasibility via Fourier-Motzkin
// elimination over the ordered field) and reports discrepancies.
// Empty result means the lattice is confirmed.
std::vector<std::string> face_lattice_check(const NHPolytope& p);

}  // namespace nhpoly

#endif
