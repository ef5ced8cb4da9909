#include "nhpoly/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nhpoly/errors.hpp"

namespace nhpoly {

PolytopeContext PolytopeContext::at(const Rational& q) {
  if (q <= 0) throw ValidationError("concrete epsilon must be positive");
  return {Mode::At, q};
}

std::string PolytopeContext::to_string() const {
  switch (mode) {
    case Mode::Classical: return "classical";
    case Mode::Infinitesimal: return "infinitesimal";
    case Mode::At: return "eps=" + rational_string(q);
  }
  return "?";
}

std::vector<int> NHPolytope::compact_face_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].compact) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> NHPolytope::compact_face_counts() const {
  std::vector<int> counts(std::max(m, 1), 0);
  for (const auto& f : faces) {
    if (f.compact) ++counts[f.dim];
  }
  return counts;
}

int NHPolytope::find_face(const std::vector<int>& generators,
                          const std::vector<int>& rays) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].generators == generators && faces[i].rays == rays) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::vector<ExponentVector> NHPolytope::face_provenance(int face_index) const {
  std::vector<ExponentVector> out;
  for (int g : faces[face_index].generators) {
    for (const auto& e : points[g].provenance) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return GradedLexZLast{}(a, b);
  });
  return out;
}

namespace {

bool prov_less(const ExponentVector& a, const ExponentVector& b) {
  return GradedLexZLast{}(a, b);
}

// Deterministic order on points: by the smallest provenance entry.
bool point_less(const ProjectedPoint& a, const ProjectedPoint& b) {
  return prov_less(a.provenance.front(), b.provenance.front());
}

EpsVector evaluate_coords(const EpsVector& coords, const Rational& q) {
  EpsVector out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.emplace_back(c.evaluate(q));
  return out;
}

// Affine dimension of conv(gens) + cone(rays).
int affine_dim(const std::vector<ProjectedPoint>& pts,
               const std::vector<int>& gens, const std::vector<int>& rays,
               int m) {
  if (gens.empty()) return -1;
  EpsMatrix rows;
  const EpsVector& base = pts[gens[0]].coords;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    EpsVector r(m);
    for (int c = 0; c < m; ++c) r[c] = pts[gens[i]].coords[c] - base[c];
    rows.push_back(std::move(r));
  }
  for (int j : rays) {
    EpsVector r(m, EpsNumber());
    r[j] = EpsNumber(Rational(1));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return rank(std::move(rows));
}

// Scales (normal, offset) to canonical form. Orientation (componentwise
// >= 0) must already hold.
void canonicalize_facet(EpsVector& normal, EpsNumber& offset) {
  bool all_const = true;
  for (const auto& c : normal) {
    if (!c.is_constant()) {
      all_const = false;
      break;
    }
  }
  if (all_const) {
    BigInt lcm = 1, gcd = 0;
    for (const auto& c : normal) {
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator(c.constant_value()));
    }
    for (const auto& c : normal) {
      BigInt scaled = boost::multiprecision::numerator(c.constant_value()) *
                      (lcm / boost::multiprecision::denominator(c.constant_value()));
      gcd = boost::multiprecision::gcd(gcd, scaled);
    }
    EpsNumber factor{Rational(lcm, gcd == 0 ? BigInt(1) : gcd)};
    for (auto& c : normal) c = c * factor;
    offset = offset * factor;
    return;
  }
  for (const auto& c : normal) {
    if (!c.is_zero()) {
      EpsNumber inv = EpsNumber(Rational(1)) / c;
      for (auto& x : normal) x = x * inv;
      offset = offset * inv;
      return;
    }
  }
  throw InternalError("zero facet normal");
}

struct FaceKey {
  std::vector<int> gens, rays;
  bool operator<(const FaceKey& o) const {
    if (gens != o.gens) return gens < o.gens;
    return rays < o.rays;
  }
};

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

NHPolytope orthant_hull(std::vector<ProjectedPoint> input,
                        const PolytopeContext& context) {
  NHPolytope p;
  p.context = context;

  if (input.empty()) {
    p.empty = true;
    p.m = 0;
    return p;
  }
  const int m = static_cast<int>(input[0].coords.size());
  p.m = m;
  p.empty = false;

  if (context.mode == PolytopeContext::Mode::At && context.q >= 1) {
    p.warnings.push_back(
        "epsilon = " + rational_string(context.q) +
        " is >= 1; the perturbed-polytope lemmas assume 0 < epsilon < 1");
  }

  // At-mode: evaluate coordinates, then merge coinciding points.
  if (context.mode == PolytopeContext::Mode::At) {
    std::size_t before = input.size();
    for (auto& pt : input) pt.coords = evaluate_coords(pt.coords, context.q);
    std::vector<ProjectedPoint> merged;
    for (auto& pt : input) {
      bool joined = false;
      for (auto& other : merged) {
        if (other.coords == pt.coords) {
          other.provenance.insert(other.provenance.end(),
                                  pt.provenance.begin(), pt.provenance.end());
          joined = true;
          break;
        }
      }
      if (!joined) merged.push_back(std::move(pt));
    }
    if (merged.size() != before) {
      p.warnings.push_back("tie: distinct support points coincide at epsilon = " +
                           rational_string(context.q));
    }
    input = std::move(merged);
  }

  for (auto& pt : input) {
    if (static_cast<int>(pt.coords.size()) != m || pt.provenance.empty()) {
      throw ValidationError("malformed projected point");
    }
    if (context.mode == PolytopeContext::Mode::Classical) {
      for (const auto& c : pt.coords) {
        if (!c.is_constant()) {
          throw ValidationError("classical polytope requires rational coordinates");
        }
      }
    }
    for (const auto& c : pt.coords) {
      if (c.sign_infinitesimal() < 0) {
        throw ValidationError("projected point with negative coordinate");
      }
    }
    std::sort(pt.provenance.begin(), pt.provenance.end(), prov_less);
  }
  std::sort(input.begin(), input.end(), point_less);
  p.points = std::move(input);
  const int n_pts = static_cast<int>(p.points.size());

  // Facet candidates: hyperplanes spanned by a point subset V' and a set J
  // of axis directions, |V'| + |J| = m. The normal solves
  // A.(v_i - v_0) = 0, A_j = 0 (j in J), oriented componentwise >= 0.
  std::map<FaceKey, FacetInequality> facet_map;

  std::vector<int> axes(m);
  for (int j = 0; j < m; ++j) axes[j] = j;

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
      // Solve for the normal.
      EpsMatrix constraints;
      const EpsVector& base = p.points[pick[0]].coords;
      for (int i = 1; i < want; ++i) {
        EpsVector r(m);
        for (int c = 0; c < m; ++c) {
          r[c] = p.points[pick[i]].coords[c] - base[c];
        }
        constraints.push_back(std::move(r));
      }
      for (int j : J) {
        EpsVector r(m, EpsNumber());
        r[j] = EpsNumber(Rational(1));
        constraints.push_back(std::move(r));
      }
      auto ns = nullspace(constraints, m);
      if (ns.size() == 1) {
        EpsVector normal = std::move(ns[0]);
        // Orient componentwise >= 0; reject mixed signs.
        int pos = 0, neg = 0;
        for (const auto& c : normal) {
          int s = c.sign_infinitesimal();
          if (s > 0) ++pos;
          if (s < 0) ++neg;
        }
        if ((pos == 0) != (neg == 0)) {
          if (pos == 0) {
            for (auto& c : normal) c = -c;
          }
          EpsNumber offset = dot(normal, base);
          bool valid = true;
          std::vector<int> gens;
          for (int i = 0; i < n_pts && valid; ++i) {
            int s = (dot(normal, p.points[i].coords) - offset).sign_infinitesimal();
            if (s < 0) valid = false;
            if (s == 0) gens.push_back(i);
          }
          if (valid) {
            std::vector<int> rays;
            for (int j = 0; j < m; ++j) {
              if (normal[j].is_zero()) rays.push_back(j);
            }
            if (affine_dim(p.points, gens, rays, m) == m - 1) {
              FaceKey key{gens, rays};
              if (!facet_map.count(key)) {
                canonicalize_facet(normal, offset);
                FacetInequality f;
                f.normal = std::move(normal);
                f.offset = std::move(offset);
                f.generators = key.gens;
                f.rays = key.rays;
                f.compact = rays.empty();
                facet_map.emplace(std::move(key), std::move(f));
              }
            }
          }
        }
      }
      // next combination
      int i = want - 1;
      while (i >= 0 && pick[i] == n_pts - want + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int l = i + 1; l < want; ++l) pick[l] = pick[l - 1] + 1;
    }
  }

  for (auto& [key, facet] : facet_map) p.facets.push_back(std::move(facet));

  // Face lattice: closure of facet incidence data under intersection.
  std::set<FaceKey> seen;
  std::vector<FaceKey> work;
  for (const auto& f : p.facets) {
    FaceKey k{f.generators, f.rays};
    if (seen.insert(k).second) work.push_back(k);
  }
  for (std::size_t a = 0; a < work.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      FaceKey k{sorted_intersection(work[a].gens, work[b].gens),
                sorted_intersection(work[a].rays, work[b].rays)};
      if (k.gens.empty()) continue;
      if (seen.insert(k).second) work.push_back(k);
    }
  }

  for (const auto& key : work) {
    Face face;
    face.generators = key.gens;
    face.rays = key.rays;
    face.dim = affine_dim(p.points, key.gens, key.rays, m);
    face.compact = key.rays.empty();
    for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
      const auto& f = p.facets[fi];
      if (std::includes(f.generators.begin(), f.generators.end(),
                        key.gens.begin(), key.gens.end()) &&
          std::includes(f.rays.begin(), f.rays.end(), key.rays.begin(),
                        key.rays.end())) {
        face.facet_indices.push_back(static_cast<int>(fi));
      }
    }
    p.faces.push_back(std::move(face));
  }
  std::sort(p.faces.begin(), p.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.generators != b.generators) return a.generators < b.generators;
    return a.rays < b.rays;
  });

  for (const auto& f : p.faces) {
    if (f.dim == 0) p.vertex_indices.push_back(f.generators.front());
  }
  return p;
}

MembershipResult membership(const NHPolytope& p, const EpsVector& x_in) {
  MembershipResult r;
  if (p.empty) {
    r.kind = MembershipKind::Outside;
    return r;
  }
  if (static_cast<int>(x_in.size()) != p.m) {
    throw ValidationError("membership query has wrong dimension");
  }
  EpsVector x = x_in;
  if (p.context.mode == PolytopeContext::Mode::At) {
    x = evaluate_coords(x, p.context.q);
  }
  std::vector<int> tight;
  for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    int s = (dot(f.normal, x) - f.offset).sign_infinitesimal();
    if (s < 0) {
      r.kind = MembershipKind::Outside;
      return r;
    }
    if (s == 0) tight.push_back(static_cast<int>(fi));
  }
  if (tight.empty()) {
    r.kind = MembershipKind::Interior;
    return r;
  }
  std::vector<int> gens = p.facets[tight[0]].generators;
  std::vector<int> rays = p.facets[tight[0]].rays;
  for (std::size_t i = 1; i < tight.size(); ++i) {
    gens = sorted_intersection(gens, p.facets[tight[i]].generators);
    rays = sorted_intersection(rays, p.facets[tight[i]].rays);
  }
  int idx = p.find_face(gens, rays);
  if (idx < 0) {
    throw InternalError("boundary point maps to a face missing from the lattice");
  }
  r.kind = MembershipKind::Boundary;
  r.face_index = idx;
  return r;
}

}  // namespace nhpoly
