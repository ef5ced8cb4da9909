#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nhpoly/errors.hpp"
#include "nhpoly/hull.hpp"

// Independent re-derivation of the compact face lattice, used by
// face_lattice_check. A nonempty point set G is the generator set of a
// compact face iff some functional A with all components > 0 is constant
// on G and strictly larger on every other input point. That feasibility
// question is decided exactly by Fourier-Motzkin elimination over the
// ordered field, with no reference to the facet-enumeration path.

namespace nhpoly {

namespace {

// Feasibility of { sum_l c_l y_l > 0 } for strict homogeneous constraints.
bool fm_feasible(std::vector<EpsVector> cons, int vars) {
  for (int v = 0; v < vars; ++v) {
    std::vector<EpsVector> pos, neg, rest;
    for (auto& c : cons) {
      int s = c[v].sign_infinitesimal();
      if (s > 0) {
        pos.push_back(std::move(c));
      } else if (s < 0) {
        neg.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    // If only one side occurs, y_v can absorb those constraints.
    if (!pos.empty() && !neg.empty()) {
      for (const auto& pc : pos) {
        for (const auto& nc : neg) {
          EpsVector combined(vars, EpsNumber());
          bool all_zero = true;
          for (int l = 0; l < vars; ++l) {
            combined[l] = pc[l] * (-nc[v]) + nc[l] * pc[v];
            if (!combined[l].is_zero()) all_zero = false;
          }
          if (all_zero) return false;  // derived 0 > 0
          rest.push_back(std::move(combined));
        }
      }
    }
    cons = std::move(rest);
  }
  // Variable-free constraints would have been all-zero vectors.
  for (const auto& c : cons) {
    bool all_zero = true;
    for (const auto& x : c) {
      if (!x.is_zero()) all_zero = false;
    }
    if (all_zero) return false;
  }
  return true;
}

int affine_rank(const std::vector<ProjectedPoint>& pts,
                const std::vector<int>& subset, int m) {
  if (subset.size() <= 1) return 0;
  EpsMatrix rows;
  const EpsVector& base = pts[subset[0]].coords;
  for (std::size_t i = 1; i < subset.size(); ++i) {
    EpsVector r(m);
    for (int c = 0; c < m; ++c) r[c] = pts[subset[i]].coords[c] - base[c];
    rows.push_back(std::move(r));
  }
  return rank(std::move(rows));
}

}  // namespace

std::vector<std::string> face_lattice_check(const NHPolytope& p) {
  std::vector<std::string> issues;
  if (p.empty) {
    if (!p.faces.empty() || !p.facets.empty() || !p.points.empty()) {
      issues.push_back("empty polytope carries faces or points");
    }
    return issues;
  }
  const int m = p.m;
  const int n_pts = static_cast<int>(p.points.size());

  // Oracle faces: generator set -> dimension.
  std::map<std::vector<int>, int> oracle;

  // Enumerate affinely independent seeds T, |T| = 1..m.
  std::vector<std::vector<int>> seeds;
  std::vector<int> current;
  auto extend = [&](auto&& self, int start) -> void {
    if (!current.empty()) seeds.push_back(current);
    if (static_cast<int>(current.size()) == m) return;
    for (int i = start; i < n_pts; ++i) {
      current.push_back(i);
      if (affine_rank(p.points, current, m) ==
          static_cast<int>(current.size()) - 1) {
        self(self, i + 1);
      }
      current.pop_back();
    }
  };
  extend(extend, 0);

  std::set<std::vector<int>> tested;
  for (const auto& seed : seeds) {
    // G = all points on the affine hull of the seed.
    const int d = static_cast<int>(seed.size()) - 1;
    std::vector<int> g;
    for (int i = 0; i < n_pts; ++i) {
      std::vector<int> probe = seed;
      if (std::find(probe.begin(), probe.end(), i) == probe.end()) {
        probe.push_back(i);
      }
      if (affine_rank(p.points, probe, m) == d) g.push_back(i);
    }
    if (!tested.insert(g).second) continue;

    // Functionals constant on aff(G): A = sum_l y_l W_l.
    EpsMatrix dirs;
    const EpsVector& base = p.points[seed[0]].coords;
    for (std::size_t i = 1; i < seed.size(); ++i) {
      EpsVector r(m);
      for (int c = 0; c < m; ++c) {
        r[c] = p.points[seed[i]].coords[c] - base[c];
      }
      dirs.push_back(std::move(r));
    }
    auto w = nullspace(dirs, m);
    const int vars = static_cast<int>(w.size());
    if (vars == 0) continue;

    std::vector<EpsVector> cons;
    for (int j = 0; j < m; ++j) {
      EpsVector c(vars);
      for (int l = 0; l < vars; ++l) c[l] = w[l][j];
      cons.push_back(std::move(c));  // A_j > 0
    }
    std::set<int> in_g(g.begin(), g.end());
    for (int i = 0; i < n_pts; ++i) {
      if (in_g.count(i)) continue;
      EpsVector c(vars);
      for (int l = 0; l < vars; ++l) {
        EpsVector diff(m);
        for (int cc = 0; cc < m; ++cc) {
          diff[cc] = p.points[i].coords[cc] - base[cc];
        }
        c[l] = dot(w[l], diff);
      }
      cons.push_back(std::move(c));  // A.(p - t0) > 0
    }
    if (fm_feasible(std::move(cons), vars)) {
      oracle.emplace(g, affine_rank(p.points, g, m));
    }
  }

  // Compare against the constructed lattice, both directions.
  std::map<std::vector<int>, int> built;
  for (const auto& f : p.faces) {
    if (f.compact) built.emplace(f.generators, f.dim);
  }
  for (const auto& [gens, dim] : oracle) {
    auto it = built.find(gens);
    std::ostringstream os;
    if (it == built.end()) {
      os << "oracle face (dim " << dim << ", " << gens.size()
         << " generators) missing from lattice";
      issues.push_back(os.str());
    } else if (it->second != dim) {
      os << "face dimension mismatch: oracle " << dim << " vs lattice "
         << it->second;
      issues.push_back(os.str());
    }
  }
  for (const auto& [gens, dim] : built) {
    if (!oracle.count(gens)) {
      std::ostringstream os;
      os << "lattice face (dim " << dim << ", " << gens.size()
         << " generators) not certified by oracle";
      issues.push_back(os.str());
    }
  }

  // Structural spot checks on the constructed polytope.
  for (const auto& f : p.facets) {
    for (int i = 0; i < n_pts; ++i) {
      if ((dot(f.normal, p.points[i].coords) - f.offset).sign_infinitesimal() < 0) {
        issues.push_back("input point violates a facet inequality");
      }
    }
  }
  for (int v : p.vertex_indices) {
    if (v < 0 || v >= n_pts) issues.push_back("vertex index out of range");
  }
  return issues;
}

}  // namespace nhpoly
