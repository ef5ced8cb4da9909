#include <algorithm>
#include <map>
#include <set>

#include "nhpoly/analysis.hpp"
#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {

bool exp_less(const ExponentVector& a, const ExponentVector& b) {
  return GradedLexZLast{}(a, b);
}

bool exp_vec_less(const std::vector<ExponentVector>& a,
                  const std::vector<ExponentVector>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      exp_less);
}

}  // namespace

FaceSignature signature_of(const NHPolytope& p) {
  FaceSignature sig;
  if (p.empty) return sig;
  for (int fi : p.compact_face_indices()) {
    sig.emplace_back(p.faces[fi].dim, p.face_provenance(fi));
  }
  std::sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return exp_vec_less(a.second, b.second);
  });
  return sig;
}

bool signature_equal(const FaceSignature& a, const FaceSignature& b) {
  return a == b;
}

// ---------------------------------------------------------------------
// Predicate collection

namespace {

void add_poly(std::set<IntPoly>& polys, const EpsNumber& value) {
  if (value.is_zero()) return;
  IntPoly p = ipoly_primitive(value.num());
  if (ipoly_degree(p) < 1) return;  // constants have no roots
  if (p.back() < 0) p = ipoly_neg(p);
  polys.insert(std::move(p));
}

}  // namespace

std::vector<IntPoly> collect_predicate_polynomials(const WeierstrassEquation& f) {
  std::set<IntPoly> polys;
  auto pts = project(f, PolytopeContext::infinitesimal());
  const int m = f.m();
  const int n_pts = static_cast<int>(pts.size());

  // (1) Pairwise coordinate differences (point collisions).
  for (int i = 0; i < n_pts; ++i) {
    for (int j = i + 1; j < n_pts; ++j) {
      for (int l = 0; l < m; ++l) {
        add_poly(polys, pts[i].coords[l] - pts[j].coords[l]);
      }
    }
  }

  // (2) + (3) Candidate hyperplanes (V', J): side values, normal
  // components, and degeneracy minors of the direction matrix.
  for (unsigned jmask = 0; jmask < (1u << m); ++jmask) {
    std::vector<int> J;
    for (int j = 0; j < m; ++j) {
      if (jmask & (1u << j)) J.push_back(j);
    }
    const int want = m - static_cast<int>(J.size());
    if (want < 1 || want > n_pts) continue;
    std::vector<int> pick(want);
    for (int i = 0; i < want; ++i) pick[i] = i;
    for (;;) {
      EpsMatrix dirs;
      const EpsVector& base = pts[pick[0]].coords;
      for (int i = 1; i < want; ++i) {
        EpsVector r(m);
        for (int c = 0; c < m; ++c) r[c] = pts[pick[i]].coords[c] - base[c];
        dirs.push_back(std::move(r));
      }
      for (int j : J) {
        EpsVector r(m, EpsNumber());
        r[j] = EpsNumber(Rational(1));
        dirs.push_back(std::move(r));
      }
      // Degeneracy transitions: all (m-1)-minors of the direction matrix.
      if (static_cast<int>(dirs.size()) == m - 1 && m >= 2) {
        for (int drop = 0; drop < m; ++drop) {
          EpsMatrix minor;
          for (const auto& row : dirs) {
            EpsVector r;
            for (int c = 0; c < m; ++c) {
              if (c != drop) r.push_back(row[c]);
            }
            minor.push_back(std::move(r));
          }
          add_poly(polys, determinant(std::move(minor)));
        }
      }
      auto ns = nullspace(dirs, m);
      if (ns.size() == 1) {
        const EpsVector& normal = ns[0];
        for (const auto& c : normal) add_poly(polys, c);
        EpsNumber offset = dot(normal, base);
        for (int i = 0; i < n_pts; ++i) {
          add_poly(polys, dot(normal, pts[i].coords) - offset);
        }
      }
      int i = want - 1;
      while (i >= 0 && pick[i] == n_pts - want + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int l = i + 1; l < want; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return {polys.begin(), polys.end()};
}

std::vector<IsolatedRoot> predicate_roots(const WeierstrassEquation& f,
                                          const Rational& q_max) {
  RootSet roots;
  for (const auto& p : collect_predicate_polynomials(f)) {
    roots.add_roots(p, q_max);
  }
  return roots.sorted();
}

Rational infinitesimal_safe_sample(const WeierstrassEquation& f) {
  auto roots = predicate_roots(f, Rational(1));
  if (roots.empty()) return Rational(1, 2);
  return std::min(roots.front().lower(), Rational(1)) / 2;
}

// ---------------------------------------------------------------------
// Correspondence

CorrespondenceReport compare_polytopes(const WeierstrassEquation& f,
                                       const PolytopeContext& a,
                                       const PolytopeContext& b) {
  CorrespondenceReport report;
  report.ctx_a = a;
  report.ctx_b = b;
  NHPolytope pa = build_delta(f, a);
  NHPolytope pb = build_delta(f, b);
  report.counts_a = pa.compact_face_counts();
  report.counts_b = pb.compact_face_counts();

  auto faces_a = pa.compact_face_indices();
  auto faces_b = pb.compact_face_indices();
  std::map<int, std::vector<ExponentVector>> prov_a, prov_b;
  for (int i : faces_a) prov_a[i] = pa.face_provenance(i);
  for (int i : faces_b) prov_b[i] = pb.face_provenance(i);

  std::set<int> consumed_b;
  std::set<int> matched_a;
  for (int ia : faces_a) {
    for (int ib : faces_b) {
      if (prov_a[ia] == prov_b[ib] &&
          pa.faces[ia].dim == pb.faces[ib].dim) {
        report.exact.push_back({ia, ib});
        consumed_b.insert(ib);
        matched_a.insert(ia);
        break;
      }
    }
  }
  for (int ia : faces_a) {
    if (matched_a.count(ia)) continue;
    CorrespondenceReport::Split split;
    split.a_face = ia;
    for (int ib : faces_b) {
      if (pb.faces[ib].dim != pa.faces[ia].dim) continue;
      const auto& pv_a = prov_a[ia];
      const auto& pv_b = prov_b[ib];
      if (pv_b.size() < pv_a.size() &&
          std::includes(pv_a.begin(), pv_a.end(), pv_b.begin(), pv_b.end(),
                        exp_less)) {
        split.b_faces.push_back(ib);
        consumed_b.insert(ib);
      }
    }
    if (split.b_faces.empty()) {
      report.unmatched_a.push_back(ia);
    } else {
      report.splits.push_back(std::move(split));
    }
  }
  for (int ib : faces_b) {
    if (!consumed_b.count(ib)) report.unmatched_b.push_back(ib);
  }
  report.dimension_preserving_bijection =
      report.splits.empty() && report.unmatched_a.empty() &&
      report.unmatched_b.empty() &&
      report.exact.size() == faces_a.size() &&
      report.exact.size() == faces_b.size();

  const bool involves_at = a.mode == PolytopeContext::Mode::At ||
                           b.mode == PolytopeContext::Mode::At;
  if (involves_at) {
    Rational q = b.mode == PolytopeContext::Mode::At ? b.q : a.q;
    if (a.mode == PolytopeContext::Mode::At) q = std::max(q, a.q);
    auto roots = predicate_roots(f, std::max(q, Rational(1)));
    if (!roots.empty()) report.threshold_bound = roots.front().lower();
    report.below_threshold =
        !report.threshold_bound || q < *report.threshold_bound;
    if (report.below_threshold && !report.dimension_preserving_bijection) {
      report.notes.push_back(
          "violation: q below the predicate-root bound but the matching "
          "is not a bijection");
    }
  }
  if (a.mode == PolytopeContext::Mode::Classical &&
      b.mode == PolytopeContext::Mode::Infinitesimal &&
      !report.unmatched_a.empty()) {
    report.notes.push_back(
        "violation: a classical compact face has no perturbed counterpart "
        "of equal dimension");
  }
  return report;
}

// ---------------------------------------------------------------------
// Sweep

SweepReport epsilon_sweep(const WeierstrassEquation& f, const Rational& q_max) {
  if (q_max <= 0) throw ValidationError("sweep requires q_max > 0");
  SweepReport report;
  report.q_max = q_max;
  report.infinitesimal_signature =
      signature_of(build_delta(f, PolytopeContext::infinitesimal()));

  auto roots = predicate_roots(f, q_max);

  auto polytope_signature_at = [&](const Rational& q) {
    PolytopeContext ctx = PolytopeContext::at(q);
    return orthant_hull(project(f, ctx), ctx);
  };

  // Elementary intervals: (0, r1), [r1, r2), ..., [rk, q_max], sampled in
  // their interiors (a threshold belongs to the interval on its right).
  struct Elementary {
    std::optional<int> lo_root;  // index into roots
    Rational lo_repr, hi_repr;
    Rational sample;
  };
  std::vector<Elementary> elems;
  if (roots.empty()) {
    elems.push_back({std::nullopt, Rational(0), q_max, q_max / 2});
  } else {
    elems.push_back(
        {std::nullopt, Rational(0), roots.front().sample(),
         std::min(roots.front().lower(), q_max) / 2});
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Elementary e;
      e.lo_root = static_cast<int>(i);
      e.lo_repr = roots[i].sample();
      if (i + 1 < roots.size()) {
        e.hi_repr = roots[i + 1].sample();
        e.sample = (roots[i].upper() + roots[i + 1].lower()) / 2;
      } else {
        e.hi_repr = q_max;
        e.sample = roots[i].upper() < q_max
                       ? (roots[i].upper() + q_max) / 2
                       : q_max;  // root exactly at q_max: singleton interval
      }
      elems.push_back(std::move(e));
    }
  }

  std::vector<SweepInterval> intervals;
  std::vector<int> kept_roots;
  for (const auto& e : elems) {
    NHPolytope p = polytope_signature_at(e.sample);
    FaceSignature sig = signature_of(p);
    if (!intervals.empty() && signature_equal(intervals.back().signature, sig)) {
      intervals.back().hi = e.hi_repr;  // merge; threshold does not change
      continue;
    }
    SweepInterval iv;
    iv.lo = e.lo_repr;
    iv.hi = e.hi_repr;
    iv.lo_is_threshold = e.lo_root.has_value();
    iv.sample = e.sample;
    iv.face_counts = p.compact_face_counts();
    iv.signature = std::move(sig);
    intervals.push_back(std::move(iv));
    if (e.lo_root) kept_roots.push_back(*e.lo_root);
  }
  report.intervals = std::move(intervals);
  for (int ri : kept_roots) {
    const IsolatedRoot& r = roots[ri];
    SweepThreshold t;
    t.exact = r.exact;
    if (r.exact) {
      t.value = r.value;
    } else {
      t.value = r.sample();
      t.lo = r.lo;
      t.hi = r.hi;
      t.rationality_unverified = r.rationality_unverified;
    }
    report.thresholds.push_back(std::move(t));
  }
  report.leftmost_matches_infinitesimal =
      !report.intervals.empty() &&
      signature_equal(report.intervals.front().signature,
                      report.infinitesimal_signature);
  return report;
}

}  // namespace nhpoly
