#include "nhpoly/analysis.hpp"

#include <algorithm>
#include <set>

#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {

EpsNumber classical_coord(std::uint32_t i, unsigned n, std::uint32_t k) {
  return EpsNumber(Rational(BigInt(i), BigInt(n - k)));
}

EpsNumber perturbed_coord(std::uint32_t i, unsigned n, std::uint32_t k) {
  return EpsNumber::fraction({BigInt(i)}, {BigInt(n - k), BigInt(1)});
}

}  // namespace

std::vector<ProjectedPoint> project(const WeierstrassEquation& f,
                                    const PolytopeContext& context) {
  const int m = f.m();
  const unsigned n = f.n();
  std::vector<ProjectedPoint> out;
  for (const auto& e : f.support().reduced) {
    EpsVector coords(m);
    for (int l = 0; l < m; ++l) {
      coords[l] = context.mode == PolytopeContext::Mode::Classical
                      ? classical_coord(e.i[l], n, e.k)
                      : perturbed_coord(e.i[l], n, e.k);
    }
    if (context.mode == PolytopeContext::Mode::At) {
      for (auto& c : coords) c = EpsNumber(c.evaluate(context.q));
    }
    bool merged = false;
    for (auto& pt : out) {
      if (pt.coords == coords) {
        pt.provenance.push_back(e);
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(ProjectedPoint{std::move(coords), {e}});
  }
  for (auto& pt : out) {
    std::sort(pt.provenance.begin(), pt.provenance.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                return GradedLexZLast{}(a, b);
              });
  }
  std::sort(out.begin(), out.end(),
            [](const ProjectedPoint& a, const ProjectedPoint& b) {
              return GradedLexZLast{}(a.provenance.front(), b.provenance.front());
            });
  return out;
}

NHPolytope build_delta(const WeierstrassEquation& f,
                       const PolytopeContext& context) {
  NHPolytope p = orthant_hull(project(f, context), context);
  if (context.mode == PolytopeContext::Mode::At && !p.empty) {
    for (const auto& poly : collect_predicate_polynomials(f)) {
      if (ipoly_eval(poly, context.q) == 0) {
        p.warnings.push_back(
            "tie: epsilon = " + rational_string(context.q) +
            " is a root of a construction predicate; combinatorics is "
            "degenerate at this exact value");
        break;
      }
    }
  }
  if (p.empty) p.m = f.m();
  return p;
}

DistanceBoundReport distance_bound_report(const WeierstrassEquation& f,
                                          const Rational& q) {
  if (q <= 0) throw ValidationError("distance bound requires q > 0");
  DistanceBoundReport report;
  report.q = q;
  report.tchirnhausen_reduced = f.coefficient_of_z(f.n() - 1).is_zero();
  const unsigned n = f.n();
  for (const auto& e : f.support().reduced) {
    DistanceRow row;
    row.point = e;
    BigInt xsum = 0;
    Rational d2 = 0;
    for (auto i : e.i) {
      xsum += i;
      Rational a(BigInt(i), BigInt(n - e.k));
      Rational b = Rational(BigInt(i)) / (Rational(BigInt(n - e.k)) + q);
      d2 += (a - b) * (a - b);
    }
    if (xsum == 0) {
      // i = 0 with k < n would violate the support condition.
      throw InternalError("support point with zero X-part below degree n");
    }
    row.d2 = d2;
    Rational bound = q * Rational(xsum, BigInt(n - e.k));
    row.bound2 = bound * bound;
    row.strict = row.d2 < row.bound2;
    if (report.tchirnhausen_reduced) {
      Rational refined = q * Rational(xsum, BigInt(2) * BigInt(n - e.k));
      row.refined_bound2 = refined * refined;
      row.refined_strict = row.d2 < *row.refined_bound2;
      if (!row.refined_strict) report.all_strict = false;
    }
    if (!row.strict) report.all_strict = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

// All k exponents appearing in the provenance of the face's generators.
std::set<std::uint32_t> face_k_set(const NHPolytope& p, const Face& face) {
  std::set<std::uint32_t> ks;
  for (int g : face.generators) {
    for (const auto& e : p.points[g].provenance) ks.insert(e.k);
  }
  return ks;
}

std::vector<BigInt> integer_scaled(const EpsVector& v) {
  BigInt lcm = 1;
  for (const auto& c : v) {
    lcm = boost::multiprecision::lcm(
        lcm, boost::multiprecision::denominator(c.constant_value()));
  }
  std::vector<BigInt> out;
  BigInt gcd = 0;
  for (const auto& c : v) {
    BigInt s = boost::multiprecision::numerator(c.constant_value()) *
               (lcm / boost::multiprecision::denominator(c.constant_value()));
    gcd = boost::multiprecision::gcd(gcd, s);
    out.push_back(s);
  }
  if (gcd > 1) {
    for (auto& x : out) x /= gcd;
  }
  return out;
}

// Nonnegative rational vectors spanning directions of the cone
// span(w) n R_{>=0}^m, via support-pattern enumeration (every extreme ray
// of the cone appears among the 1-dimensional pattern subspaces).
std::vector<EpsVector> nonnegative_rays(const std::vector<EpsVector>& w, int m) {
  std::vector<EpsVector> rays;
  const int wdim = static_cast<int>(w.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    EpsMatrix cons;  // over y-space: sum_l y_l w_l[j] = 0 for j outside mask
    for (int j = 0; j < m; ++j) {
      if (mask & (1u << j)) continue;
      EpsVector c(wdim);
      for (int l = 0; l < wdim; ++l) c[l] = w[l][j];
      cons.push_back(std::move(c));
    }
    auto ys = nullspace(cons, wdim);
    if (ys.size() != 1) continue;
    EpsVector a(m, EpsNumber());
    for (int l = 0; l < wdim; ++l) {
      for (int j = 0; j < m; ++j) a[j] = a[j] + ys[0][l] * w[l][j];
    }
    int pos = 0, neg = 0;
    for (const auto& c : a) {
      int s = c.sign_infinitesimal();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos == 0 && neg == 0) continue;
    if (pos > 0 && neg > 0) continue;
    if (pos == 0) {
      for (auto& c : a) c = -c;
    }
    rays.push_back(std::move(a));
  }
  return rays;
}

}  // namespace

RationalityVerdict classify_face(const NHPolytope& p, int face_index) {
  RationalityVerdict v;
  if (p.context.mode != PolytopeContext::Mode::Infinitesimal) {
    v.kind = Rationality::NotApplicable;
    v.reason = "rationality is classified on the blurred (infinitesimal) polytope only";
    return v;
  }
  const Face& face = p.faces.at(face_index);
  if (!face.compact) {
    v.kind = Rationality::NotApplicable;
    v.reason = "face is unbounded";
    return v;
  }
  const int m = p.m;
  // Faces of dim >= 1 that are parallel to a coordinate hyperplane (some
  // coordinate constant across the face) are outside the scope of the
  // criterion; vertices are always classified.
  if (face.dim >= 1) {
    for (int l = 0; l < m; ++l) {
      bool constant = true;
      const EpsNumber& first = p.points[face.generators[0]].coords[l];
      for (std::size_t g = 1; g < face.generators.size(); ++g) {
        if (!(p.points[face.generators[g]].coords[l] == first)) {
          constant = false;
          break;
        }
      }
      if (constant) {
        v.kind = Rationality::NotApplicable;
        v.reason = "face is parallel to a coordinate hyperplane (x_" +
                   std::to_string(l + 1) + " constant)";
        return v;
      }
    }
  }

  // Criterion 1: all generator provenance shares one Z-exponent.
  std::set<std::uint32_t> ks = face_k_set(p, face);
  const bool single_k = ks.size() == 1;

  // Criterion 2: the affine hull is cut out by m-dim independent
  // equations with nonnegative integer normals and positive offsets.
  EpsMatrix dirs;
  const EpsVector& base = p.points[face.generators[0]].coords;
  for (std::size_t g = 1; g < face.generators.size(); ++g) {
    EpsVector r(m);
    for (int c = 0; c < m; ++c) {
      r[c] = p.points[face.generators[g]].coords[c] - base[c];
    }
    dirs.push_back(std::move(r));
  }
  auto w = rational_orthogonal_space(dirs, m);
  bool integer_criterion = static_cast<int>(w.size()) == m - face.dim;
  std::vector<EpsVector> chosen;
  if (integer_criterion) {
    auto rays = nonnegative_rays(w, m);
    // Spanning subset with positive offsets: if any ray has B > 0, adding
    // it to B = 0 rays keeps nonnegativity and makes offsets positive.
    int positive = -1;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (dot(rays[i], base).sign_infinitesimal() > 0) {
        positive = static_cast<int>(i);
        break;
      }
    }
    if (positive < 0) {
      integer_criterion = false;
    } else {
      std::vector<EpsVector> candidates;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (dot(rays[i], base).sign_infinitesimal() > 0) {
          candidates.push_back(rays[i]);
        } else {
          EpsVector sum(m);
          for (int c = 0; c < m; ++c) sum[c] = rays[i][c] + rays[positive][c];
          candidates.push_back(std::move(sum));
        }
      }
      // Greedy independent subset.
      EpsMatrix picked_rows;
      for (const auto& cand : candidates) {
        EpsMatrix trial = picked_rows;
        trial.push_back(cand);
        if (rank(trial) > rank(picked_rows)) {
          picked_rows.push_back(cand);
          chosen.push_back(cand);
        }
        if (static_cast<int>(chosen.size()) == m - face.dim) break;
      }
      if (static_cast<int>(chosen.size()) != m - face.dim) {
        integer_criterion = false;
        chosen.clear();
      }
    }
  }

  v.criteria_agree = (single_k == integer_criterion);
  if (single_k) {
    v.kind = Rationality::Rational;
    v.common_k = *ks.begin();
    for (const auto& a : chosen) {
      IntegerHyperplane h;
      h.normal = integer_scaled(a);
      EpsVector scaled(m);
      for (int c = 0; c < m; ++c) scaled[c] = EpsNumber(Rational(h.normal[c]));
      h.offset = dot(scaled, base);
      v.system.push_back(std::move(h));
    }
  } else {
    v.kind = Rationality::NonRational;
    // Witness: two provenance entries with different k.
    ExponentVector first, second;
    bool have_first = false;
    for (int g : face.generators) {
      for (const auto& e : p.points[g].provenance) {
        if (!have_first) {
          first = e;
          have_first = true;
        } else if (e.k != first.k) {
          second = e;
          v.witness = std::make_pair(first, second);
          break;
        }
      }
      if (v.witness) break;
    }
  }
  return v;
}

MultiPoly face_polynomial(const NHPolytope& p, int face_index,
                          const WeierstrassEquation& f) {
  MultiPoly out(f.m(), f.field());
  if (p.empty) return out;
  if (p.m != f.m()) {
    throw ValidationError("polytope and equation dimensions differ");
  }
  for (const auto& e : p.face_provenance(face_index)) {
    FieldScalar c = f.polynomial().coefficient(e);
    if (c.is_zero()) {
      throw ValidationError("face provenance does not match the equation");
    }
    out.add_term(e, c);
  }
  return out;
}

namespace {

// Smallest face of p containing the given input point.
int minimal_face_of_point(const NHPolytope& p, int point_index) {
  std::vector<int> gens, rays;
  bool first = true;
  for (const auto& f : p.facets) {
    if (std::find(f.generators.begin(), f.generators.end(), point_index) ==
        f.generators.end()) {
      continue;
    }
    if (first) {
      gens = f.generators;
      rays = f.rays;
      first = false;
    } else {
      std::vector<int> g2, r2;
      std::set_intersection(gens.begin(), gens.end(), f.generators.begin(),
                            f.generators.end(), std::back_inserter(g2));
      std::set_intersection(rays.begin(), rays.end(), f.rays.begin(),
                            f.rays.end(), std::back_inserter(r2));
      gens = std::move(g2);
      rays = std::move(r2);
    }
  }
  if (first) return -1;  // interior point (on no facet)
  return p.find_face(gens, rays);
}

}  // namespace

NonRationalAudit nonrational_face_audit(const NHPolytope& p) {
  if (p.context.mode != PolytopeContext::Mode::Infinitesimal) {
    throw ValidationError("audit requires the infinitesimal-mode polytope");
  }
  NonRationalAudit audit;
  if (p.empty) return audit;
  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const Face& face = p.faces[fi];
    if (!face.compact) continue;
    RationalityVerdict v = classify_face(p, static_cast<int>(fi));
    if (v.kind != Rationality::NonRational) continue;
    NonRationalAuditEntry entry;
    entry.face_index = static_cast<int>(fi);
    entry.dim = face.dim;
    entry.generator_count = static_cast<int>(face.generators.size());
    entry.count_ok = entry.generator_count == face.dim + 1;
    entry.interior_empty_ok = true;
    for (int g : face.generators) {
      if (minimal_face_of_point(p, g) == static_cast<int>(fi)) {
        entry.interior_empty_ok = false;
      }
    }
    if (!entry.count_ok || !entry.interior_empty_ok) audit.ok = false;
    audit.entries.push_back(std::move(entry));
  }
  return audit;
}

TangentConeReport tangent_cone(const WeierstrassEquation& f) {
  TangentConeReport report;
  report.initial_form = MultiPoly(f.m(), f.field());
  const unsigned n = f.n();
  for (const auto& [e, c] : f.polynomial().terms()) {
    if (e.total_degree() == n) report.initial_form.add_term(e, c);
  }
  report.tchirnhausen_reduced = f.coefficient_of_z(n - 1).is_zero();

  const EpsNumber one{Rational(1)};
  const EpsNumber eps = EpsNumber::epsilon();
  const EpsNumber half{Rational(1, 2)};
  for (const auto& e : f.support().reduced) {
    TangentConeRow row;
    row.point = e;
    row.on_initial_form = e.total_degree() == n;
    EpsNumber sigma;
    for (int l = 0; l < f.m(); ++l) {
      sigma += perturbed_coord(e.i[l], n, e.k);
    }
    row.in_band = (one - sigma).sign_infinitesimal() > 0 &&
                  (sigma - (one - eps)).sign_infinitesimal() > 0;
    row.above_one = (sigma - one).sign_infinitesimal() > 0;
    row.in_refined_band = (one - sigma).sign_infinitesimal() > 0 &&
                          (sigma - (one - eps * half)).sign_infinitesimal() > 0;
    bool consistent = row.on_initial_form ? (row.in_band && !row.above_one)
                                          : (row.above_one && !row.in_band);
    if (report.tchirnhausen_reduced && row.on_initial_form) {
      consistent = consistent && row.in_refined_band;
    }
    if (!consistent) report.band_ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

PermissibilityReport is_permissible(const WeierstrassEquation& f,
                                    std::vector<int> vars) {
  const int m = f.m();
  std::sort(vars.begin(), vars.end());
  if (vars.empty() || std::unique(vars.begin(), vars.end()) != vars.end() ||
      vars.front() < 0 || vars.back() >= m) {
    throw ValidationError("ideal variables must be a nonempty subset of 1..m");
  }
  PermissibilityReport report;
  report.vars = vars;
  const unsigned n = f.n();
  const EpsNumber one{Rational(1)};
  const EpsNumber eps = EpsNumber::epsilon();

  for (const auto& e : f.support().reduced) {
    // Direct support criterion.
    std::uint32_t reduced_sum = e.k;
    for (int l : vars) reduced_sum += e.i[l];
    if (reduced_sum < n) report.violating_terms.push_back(e);

    // Band criterion on the projected point.
    PermissibilityRow row;
    row.point = e;
    EpsNumber sigma;
    for (int l : vars) sigma += perturbed_coord(e.i[l], n, e.k);
    const int vs_one = (sigma - one).sign_infinitesimal();
    if (vs_one >= 0) {
      row.band_class = 1;
    } else if ((sigma - (one - eps)).sign_infinitesimal() > 0) {
      row.band_class = 0;
    } else {
      row.band_class = -1;
    }
    for (int l = 0; l < m; ++l) {
      if (std::find(vars.begin(), vars.end(), l) == vars.end() && e.i[l] != 0) {
        row.others_zero = false;
      }
    }
    report.rows.push_back(std::move(row));
  }
  report.permissible = report.violating_terms.empty();
  report.region_check = std::all_of(
      report.rows.begin(), report.rows.end(),
      [](const PermissibilityRow& r) { return r.band_class >= 0; });
  report.criteria_agree = report.permissible == report.region_check;
  return report;
}

ContractionSearch find_contractible_vertices(const WeierstrassEquation& f) {
  ContractionSearch search;
  NHPolytope delta0 = build_delta(f, PolytopeContext::classical());
  if (delta0.empty) return search;
  const int m = f.m();
  const unsigned n = f.n();
  const FieldConfig& cfg = f.field();
  const std::uint64_t ch = cfg.characteristic();
  const bool n_invertible = ch == 0 || n % ch != 0;

  for (int vi : delta0.vertex_indices) {
    const ProjectedPoint& vertex = delta0.points[vi];
    std::vector<Rational> coords;
    std::vector<std::uint32_t> b;
    bool integral = true;
    for (const auto& c : vertex.coords) {
      Rational r = c.constant_value();
      coords.push_back(r);
      if (boost::multiprecision::denominator(r) != 1) {
        integral = false;
        break;
      }
      b.push_back(boost::multiprecision::numerator(r).convert_to<std::uint32_t>());
    }
    if (!integral) continue;

    // Candidate mu from the coefficient pattern of (Z + mu X^b)^n.
    std::vector<FieldScalar> mus;
    if (n_invertible) {
      ExponentVector probe;
      probe.i = b;
      probe.k = n - 1;
      FieldScalar coeff = f.polynomial().coefficient(probe);
      if (coeff.is_zero()) continue;
      mus.push_back(coeff / FieldScalar::from_integer(cfg, BigInt(n)));
    } else {
      ExponentVector probe;
      probe.i.resize(m);
      for (int l = 0; l < m; ++l) probe.i[l] = b[l] * n;
      probe.k = 0;
      FieldScalar coeff = f.polynomial().coefficient(probe);
      if (coeff.is_zero()) continue;
      auto roots = coeff.nth_roots(n);
      if (!roots) {
        search.unresolved.push_back(
            {coords, "root search unavailable (modulus too large for the "
                     "exhaustive n-th root search)"});
        continue;
      }
      if (roots->empty()) {
        search.unresolved.push_back(
            {coords,
             "mu^" + std::to_string(n) +
                 " equation has no base-field solution (a contraction may "
                 "exist over the algebraic closure)"});
        continue;
      }
      mus = *roots;
    }

    for (const auto& mu : mus) {
      if (mu.is_zero()) continue;
      // The contraction substitution is Z -> Z - mu X^b.
      ExponentVector be;
      be.i = b;
      be.k = 0;
      MultiPoly alpha = MultiPoly::monomial(m, cfg, be, -mu);
      SubstitutionResult sub = substitute_z(f, alpha);
      if (!sub.ok()) continue;
      NHPolytope delta_new = build_delta(*sub.equation, PolytopeContext::classical());
      if (membership(delta_new, vertex.coords).kind != MembershipKind::Outside) {
        continue;
      }
      bool contained = true;
      for (const auto& pt : delta_new.points) {
        if (membership(delta0, pt.coords).kind == MembershipKind::Outside) {
          contained = false;
          break;
        }
      }
      if (!contained) continue;
      Contraction c{coords, b, -mu, *sub.equation};
      search.contractions.push_back(std::move(c));
      break;  // one verified contraction per vertex
    }
  }
  return search;
}

ContractionIteration iterate_contractions(const WeierstrassEquation& f,
                                          int budget) {
  ContractionIteration it{.steps = {}, .final_equation = f, .terminated = false};
  WeierstrassEquation current = f;
  for (int round = 0; round < budget; ++round) {
    ContractionSearch search = find_contractible_vertices(current);
    it.unresolved = search.unresolved;
    if (search.contractions.empty()) {
      it.terminated = true;
      break;
    }
    current = search.contractions.front().result;
    it.steps.push_back({search.contractions.front()});
  }
  it.final_equation = current;
  return it;
}

namespace {

using FPoly = std::vector<FieldScalar>;  // dense, ascending

FPoly fpoly_trim(FPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

FieldScalar fpoly_eval(const FPoly& p, const FieldScalar& x) {
  FieldScalar acc = FieldScalar::zero(x.config());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact division by the monic linear (t - alpha).
FPoly fpoly_deflate(const FPoly& p, const FieldScalar& alpha) {
  FPoly q(p.size() - 1, FieldScalar::zero(alpha.config()));
  FieldScalar carry = FieldScalar::zero(alpha.config());
  for (std::size_t i = p.size(); i-- > 1;) {
    q[i - 1] = p[i] + carry;
    carry = q[i - 1] * alpha;
  }
  return q;
}

// Base-field roots of p (with the origin excluded by the caller).
std::vector<FieldScalar> base_field_roots(const FPoly& p, const FieldConfig& cfg) {
  std::vector<FieldScalar> out;
  if (cfg.kind == FieldConfig::Kind::Rationals) {
    BigInt lcm = 1;
    for (const auto& c : p) {
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator(c.rational_value()));
    }
    IntPoly ip;
    for (const auto& c : p) {
      const Rational& r = c.rational_value();
      ip.push_back(boost::multiprecision::numerator(r) *
                   (lcm / boost::multiprecision::denominator(r)));
    }
    for (const auto& r : rational_roots(ipoly_trim(std::move(ip)))) {
      out.push_back(FieldScalar::from_rational(cfg, r));
    }
    return out;
  }
  if (cfg.p > (1u << 16)) {
    throw FieldError("root search over F_p with p > 2^16 is not supported");
  }
  for (std::uint64_t x = 0; x < cfg.p; ++x) {
    FieldScalar s = FieldScalar::from_integer(cfg, BigInt(x));
    if (fpoly_eval(p, s).is_zero()) out.push_back(s);
  }
  return out;
}

}  // namespace

BinomialSegments detect_binomial_segments(const WeierstrassEquation& f) {
  if (f.m() != 2) {
    throw ValidationError("binomial segments are defined for surfaces (m = 2)");
  }
  BinomialSegments result{build_delta(f, PolytopeContext::classical()), {}};
  const NHPolytope& p = result.delta0;
  if (p.empty) return result;
  const FieldConfig& cfg = f.field();

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const Face& face = p.faces[fi];
    if (!face.compact || face.dim != 1) continue;
    // Slope -1: direction (dx, dy) with dx + dy = 0.
    const EpsVector& a = p.points[face.generators.front()].coords;
    const EpsVector& b = p.points[face.generators.back()].coords;
    Rational dx = (b[0] - a[0]).constant_value();
    Rational dy = (b[1] - a[1]).constant_value();
    if (dx == 0 || dx + dy != 0) continue;

    BinomialSegmentReport report;
    report.face_index = static_cast<int>(fi);
    report.face_poly = face_polynomial(p, static_cast<int>(fi), f);

    std::set<std::uint32_t> ks;
    for (const auto& [e, c] : report.face_poly.terms()) ks.insert(e.k);
    for (std::uint32_t k : ks) {
      MultiPoly h = report.face_poly.z_coefficient(k);
      // Homogeneous in X, Y along a slope -1 face.
      std::uint32_t d = h.terms().begin()->first.total_degree();
      FPoly ht(d + 1, FieldScalar::zero(cfg));
      for (const auto& [e, c] : h.terms()) {
        if (e.total_degree() != d) {
          throw InternalError("face component is not homogeneous");
        }
        ht[e.i[1]] = c;  // coefficient of t^j, j = Y-exponent
      }
      ht = fpoly_trim(std::move(ht));

      BinomialComponent comp;
      comp.k = k;
      // X-power: the gap between total degree and the t-degree.
      comp.x_power = d - static_cast<std::uint32_t>(ht.size() - 1);
      // Y-power as the (Y - 0X) factor.
      std::uint32_t v = 0;
      while (v < ht.size() && ht[v].is_zero()) ++v;
      FPoly core(ht.begin() + v, ht.end());
      if (v > 0) {
        comp.linear_factors.emplace_back(FieldScalar::zero(cfg), v);
      }
      for (const auto& root : base_field_roots(core, cfg)) {
        if (root.is_zero()) continue;
        std::uint32_t mult = 0;
        while (core.size() > 1 && fpoly_eval(core, root).is_zero()) {
          core = fpoly_deflate(core, root);
          ++mult;
        }
        if (mult > 0) comp.linear_factors.emplace_back(root, mult);
      }
      comp.constant = core.back();
      // Monic residual, homogenized by X.
      MultiPoly residual(2, cfg);
      const std::uint32_t rdeg = static_cast<std::uint32_t>(core.size() - 1);
      for (std::uint32_t j = 0; j < core.size(); ++j) {
        ExponentVector e;
        e.i = {rdeg - j, j};
        e.k = 0;
        residual.add_term(e, core[j] / comp.constant);
      }
      comp.residual = residual;
      std::size_t distinct_alphas = comp.linear_factors.size();
      comp.binomial_alone = distinct_alphas == 1 && rdeg == 0;
      report.components.push_back(std::move(comp));
    }
    report.is_binomial =
        report.components.size() == 1 && report.components.front().binomial_alone;
    result.segments.push_back(std::move(report));
  }
  return result;
}

}  // namespace nhpoly
