#ifndef NHPOLY_ANALYSIS_HPP
#define NHPOLY_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhpoly/equation.hpp"
#include "nhpoly/hull.hpp"

namespace nhpoly {

// ---------------------------------------------------------------------
// Projections and polytopes

// One ProjectedPoint per distinct image of the reduced support under the
// context's projection: classical i_l/(n-k), perturbed i_l/(n-k+eps)
// (evaluated at q in At mode). Provenance = full preimage set.
std::vector<ProjectedPoint> project(const WeierstrassEquation& f,
                                    const PolytopeContext& context);

// orthant_hull of project(f, context). At-mode results carry tie warnings
// when q is a root of one of the construction predicates.
NHPolytope build_delta(const WeierstrassEquation& f,
                       const PolytopeContext& context);

// ---------------------------------------------------------------------
// Distance bound (classical vs perturbed projection)

struct DistanceRow {
  ExponentVector point;
  Rational d2;      // squared distance between the two projections
  Rational bound2;  // squared bound q*(i_1+...+i_m)/(n-k)
  bool strict = false;
  std::optional<Rational> refined_bound2;  // denominator 2(n-k), if reduced
  bool refined_strict = false;
};

struct DistanceBoundReport {
  Rational q;
  bool tchirnhausen_reduced = false;
  std::vector<DistanceRow> rows;
  bool all_strict = true;
};

DistanceBoundReport distance_bound_report(const WeierstrassEquation& f,
                                          const Rational& q);

// ---------------------------------------------------------------------
// Face rationality (perturbed polytopes, infinitesimal order)

enum class Rationality { Rational, NonRational, NotApplicable };

struct IntegerHyperplane {
  std::vector<BigInt> normal;  // nonnegative, coprime
  EpsNumber offset;            // positive in the infinitesimal order
};

struct RationalityVerdict {
  Rationality kind = Rationality::NotApplicable;
  std::optional<std::uint32_t> common_k;                   // Rational
  std::vector<IntegerHyperplane> system;                   // Rational
  std::optional<std::pair<ExponentVector, ExponentVector>> witness;  // NonRational
  std::string reason;                                      // NotApplicable
  bool criteria_agree = true;  // same-k criterion vs integer-system criterion
};

// Classifies a face of an Infinitesimal-mode polytope. Non-compact faces,
// faces with a constant coordinate (dim >= 1), and faces of classical or
// concrete-eps polytopes yield NotApplicable.
RationalityVerdict classify_face(const NHPolytope& p, int face_index);

// Sum of the terms of f whose projected point lies on the face.
MultiPoly face_polynomial(const NHPolytope& p, int face_index,
                          const WeierstrassEquation& f);

struct NonRationalAuditEntry {
  int face_index;
  int dim;
  int generator_count;
  bool count_ok;           // generator_count == dim + 1
  bool interior_empty_ok;  // no projected point in the relative interior
};

struct NonRationalAudit {
  std::vector<NonRationalAuditEntry> entries;
  bool ok = true;
};

// Checks the dim+1 property and the empty-relative-interior property on
// every non-rational compact face. Requires Infinitesimal mode.
NonRationalAudit nonrational_face_audit(const NHPolytope& p);

// ---------------------------------------------------------------------
// Tangent cone band

struct TangentConeRow {
  ExponentVector point;
  bool on_initial_form = false;  // i_1+...+i_m+k == n
  bool in_band = false;          // 1-eps < sum x < 1
  bool above_one = false;        // sum x > 1
  bool in_refined_band = false;  // 1-eps/2 < sum x < 1
};

struct TangentConeReport {
  MultiPoly initial_form;  // terms of total degree n, including Z^n
  bool tchirnhausen_reduced = false;
  std::vector<TangentConeRow> rows;
  bool band_ok = true;  // band <=> initial form, everything else above 1
};

TangentConeReport tangent_cone(const WeierstrassEquation& f);

// ---------------------------------------------------------------------
// Permissible coordinate ideals

struct PermissibilityRow {
  ExponentVector point;
  int band_class = 0;       // +1: sum >= 1; 0: 1-eps band; -1: below
  bool others_zero = true;  // i_l == 0 outside the ideal's variables
};

struct PermissibilityReport {
  std::vector<int> vars;  // 0-based X indices, strictly increasing
  bool permissible = false;
  std::vector<ExponentVector> violating_terms;
  bool region_check = false;
  bool criteria_agree = true;
  std::vector<PermissibilityRow> rows;
};

// Direct support criterion (j_{i_1}+...+j_{i_r}+k >= n) and the
// infinitesimal band criterion, computed independently.
PermissibilityReport is_permissible(const WeierstrassEquation& f,
                                    std::vector<int> vars);

// ---------------------------------------------------------------------
// Vertex contractions (classical polytope)

struct Contraction {
  std::vector<Rational> vertex;
  std::vector<std::uint32_t> b;  // monomial exponents (= vertex)
  FieldScalar lambda;            // substitution Z -> Z + lambda X^b
  WeierstrassEquation result;
};

struct UnresolvedCandidate {
  std::vector<Rational> vertex;
  std::string reason;
};

struct ContractionSearch {
  std::vector<Contraction> contractions;
  std::vector<UnresolvedCandidate> unresolved;
};

// Candidate lambda from the coefficient pattern of (Z + mu X^b)^n (the
// k = n-1 linear equation when char does not divide n, the k = 0 root
// equation otherwise; the substitution parameter is -mu). Every returned
// contraction is verified: delta_0(result) is contained in
// delta_0(f) minus the vertex.
ContractionSearch find_contractible_vertices(const WeierstrassEquation& f);

struct ContractionStep {
  Contraction applied;
};

struct ContractionIteration {
  std::vector<ContractionStep> steps;
  WeierstrassEquation final_equation;
  bool terminated = false;  // false = budget exhausted
  std::vector<UnresolvedCandidate> unresolved;
};

ContractionIteration iterate_contractions(const WeierstrassEquation& f,
                                          int budget = 32);

// ---------------------------------------------------------------------
// Binomial segments (m = 2, classical polytope)

struct BinomialComponent {
  std::uint32_t k = 0;
  FieldScalar constant;
  std::uint32_t x_power = 0;
  // (alpha, multiplicity) for each base-field factor (Y - alpha X)^e;
  // alpha = 0 encodes a plain Y power.
  std::vector<std::pair<FieldScalar, std::uint32_t>> linear_factors;
  MultiPoly residual;  // homogeneous, no base-field linear factors
  bool binomial_alone = false;  // single alpha, constant residual
};

struct BinomialSegmentReport {
  int face_index;  // compact 1-face of slope -1 in the classical polytope
  MultiPoly face_poly;
  std::vector<BinomialComponent> components;
  bool is_binomial = false;  // single k, single alpha, constant residual
};

struct BinomialSegments {
  NHPolytope delta0;
  std::vector<BinomialSegmentReport> segments;
};

BinomialSegments detect_binomial_segments(const WeierstrassEquation& f);

// ---------------------------------------------------------------------
// Comparing polytopes and sweeping epsilon

// Compact-face provenance signature: sorted (dim, provenance) pairs.
using FaceSignature =
    std::vector<std::pair<int, std::vector<ExponentVector>>>;

FaceSignature signature_of(const NHPolytope& p);
bool signature_equal(const FaceSignature& a, const FaceSignature& b);

struct CorrespondenceReport {
  PolytopeContext ctx_a, ctx_b;
  std::vector<int> counts_a, counts_b;  // compact faces per dimension
  struct Match {
    int a_face;
    int b_face;
  };
  std::vector<Match> exact;  // equal provenance and dimension
  struct Split {
    int a_face;
    std::vector<int> b_faces;  // equal dim, provenance strictly contained
  };
  std::vector<Split> splits;
  std::vector<int> unmatched_a;
  std::vector<int> unmatched_b;  // faces gained on the b side
  bool dimension_preserving_bijection = false;
  // First positive root of the construction predicates (if any); for
  // (Infinitesimal, At q) with q below it, the matching must be a
  // bijection.
  std::optional<Rational> threshold_bound;
  bool below_threshold = false;
  std::vector<std::string> notes;
};

CorrespondenceReport compare_polytopes(const WeierstrassEquation& f,
                                       const PolytopeContext& a,
                                       const PolytopeContext& b);

struct SweepThreshold {
  bool exact = true;
  Rational value;      // exact, or a representative inside (lo, hi)
  Rational lo, hi;     // isolating interval when not exact
  bool rationality_unverified = false;
};

struct SweepInterval {
  // [lo, hi) except the leftmost (0, hi) and the rightmost [lo, q_max].
  Rational lo, hi;
  bool lo_is_threshold = false;  // tie convention: threshold belongs here
  Rational sample;
  std::vector<int> face_counts;
  FaceSignature signature;
};

struct SweepReport {
  Rational q_max;
  std::vector<SweepThreshold> thresholds;
  std::vector<SweepInterval> intervals;
  FaceSignature infinitesimal_signature;
  bool leftmost_matches_infinitesimal = false;
};

// Exact combinatorial sweep of eps over (0, q_max]: thresholds are the
// roots of the construction predicates at which the compact-face
// signature changes.
SweepReport epsilon_sweep(const WeierstrassEquation& f, const Rational& q_max);

// Numerators of every predicate the hull construction depends on
// (pairwise coordinate differences, candidate-hyperplane side values and
// normal components, degeneracy minors), deduped.
std::vector<IntPoly> collect_predicate_polynomials(const WeierstrassEquation& f);

// All predicate roots in (0, q_max], merged across polynomials.
std::vector<IsolatedRoot> predicate_roots(const WeierstrassEquation& f,
                                          const Rational& q_max);

// A rational sample 0 < q < min(first predicate root, 1): At(q) is
// combinatorially identical to the blurred polytope.
Rational infinitesimal_safe_sample(const WeierstrassEquation& f);

}  // namespace nhpoly

#endif
