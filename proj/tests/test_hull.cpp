#include <doctest.h>

#include "nhpoly/analysis.hpp"
#include "nhpoly/hull.hpp"

#include "corpus.hpp"

using namespace nhpoly;

namespace {

const FieldConfig kQ = FieldConfig::rationals();

WeierstrassEquation eq(const std::string& text) {
  return WeierstrassEquation::parse(text, kQ);
}

EpsVector rational_point(std::initializer_list<Rational> cs) {
  EpsVector v;
  for (const auto& c : cs) v.emplace_back(c);
  return v;
}

}  // namespace

TEST_CASE("m=1 single point: polytope [3/2, inf)") {
  auto p = build_delta(eq("Z^2+X^3"), PolytopeContext::classical());
  CHECK(p.m == 1);
  REQUIRE(p.points.size() == 1);
  CHECK(p.points[0].coords[0].constant_value() == Rational(3, 2));
  REQUIRE(p.vertex_indices.size() == 1);
  REQUIRE(p.facets.size() == 1);
  CHECK(p.facets[0].compact);
  CHECK(p.compact_face_counts() == std::vector<int>{1});
  CHECK(membership(p, rational_point({Rational(2)})).kind ==
        MembershipKind::Interior);
  CHECK(membership(p, rational_point({Rational(3, 2)})).kind ==
        MembershipKind::Boundary);
  CHECK(membership(p, rational_point({Rational(1)})).kind ==
        MembershipKind::Outside);
}

TEST_CASE("figure-1 equation, classical: corners (0,2), (2,0)") {
  auto p = build_delta(eq("Z^4+(Y-X)^4*Z^2+(Y+3*X)^8"),
                       PolytopeContext::classical());
  CHECK(p.points.size() == 9);
  REQUIRE(p.vertex_indices.size() == 2);
  std::vector<std::pair<Rational, Rational>> vertices;
  for (int vi : p.vertex_indices) {
    vertices.emplace_back(p.points[vi].coords[0].constant_value(),
                          p.points[vi].coords[1].constant_value());
  }
  std::sort(vertices.begin(), vertices.end());
  CHECK(vertices[0] == std::make_pair(Rational(0), Rational(2)));
  CHECK(vertices[1] == std::make_pair(Rational(2), Rational(0)));

  // One compact facet (x + y >= 2) carrying all nine points.
  int compact_facets = 0;
  for (const auto& f : p.facets) {
    if (!f.compact) continue;
    ++compact_facets;
    CHECK(f.generators.size() == 9);
    REQUIRE(f.normal.size() == 2);
    CHECK(f.normal[0].constant_value() == 1);
    CHECK(f.normal[1].constant_value() == 1);
    CHECK(f.offset.constant_value() == 2);
  }
  CHECK(compact_facets == 1);

  // Hidden points: (1,1) comes from both (2,2,2) and (4,4,0).
  bool found = false;
  for (const auto& pt : p.points) {
    if (pt.coords[0].constant_value() == 1 &&
        pt.coords[1].constant_value() == 1) {
      found = true;
      REQUIRE(pt.provenance.size() == 2);
      CHECK(pt.provenance[0] == ExponentVector{{2, 2}, 2});
      CHECK(pt.provenance[1] == ExponentVector{{4, 4}, 0});
    }
  }
  CHECK(found);
}

TEST_CASE("figure-5 equation, infinitesimal: one compact facet x+y = 4/(2+e)") {
  auto f = eq("Z^4+(Y-X)^4*Z^2+(Y+3*X)^8");
  auto p = build_delta(f, PolytopeContext::infinitesimal());
  CHECK(p.points.size() == 14);  // no collisions under rho_eps
  auto counts = p.compact_face_counts();
  CHECK(counts == std::vector<int>{2, 1});

  const EpsNumber expected_offset =
      EpsNumber::fraction({BigInt(4)}, {BigInt(2), BigInt(1)});
  int compact_facets = 0;
  for (const auto& f2 : p.facets) {
    if (!f2.compact) continue;
    ++compact_facets;
    CHECK(f2.generators.size() == 5);  // the k=2 group
    CHECK(f2.offset == expected_offset);
    for (int g : f2.generators) {
      for (const auto& e : p.points[g].provenance) CHECK(e.k == 2);
    }
  }
  CHECK(compact_facets == 1);

  // Every k=0 point is strictly beyond the compact facet.
  for (const auto& pt : p.points) {
    if (pt.provenance[0].k != 0) continue;
    EpsNumber sum = pt.coords[0] + pt.coords[1];
    CHECK((sum - expected_offset).sign_infinitesimal() > 0);
  }
}

TEST_CASE("membership: §3 example at eps=3 and infinitesimally") {
  auto f = eq("Z^3+(X^2+X*Y^2)*Z+X^2*Y");
  auto at3 = build_delta(f, PolytopeContext::at(Rational(3)));
  CHECK(membership(at3, rational_point({Rational(1, 3), Rational(1, 6)})).kind ==
        MembershipKind::Interior);

  auto inf = build_delta(f, PolytopeContext::infinitesimal());
  EpsVector x{EpsNumber::fraction({BigInt(2)}, {BigInt(3), BigInt(1)}),
              EpsNumber::fraction({BigInt(1)}, {BigInt(3), BigInt(1)})};
  auto r = membership(inf, x);
  REQUIRE(r.kind == MembershipKind::Boundary);
  CHECK(inf.faces[r.face_index].dim == 0);  // a vertex
}

TEST_CASE("empty polytope conventions") {
  auto p = build_delta(eq("Z^4"), PolytopeContext::infinitesimal());
  CHECK(p.empty);
  CHECK(membership(p, rational_point({Rational(1)})).kind ==
        MembershipKind::Outside);
  CHECK(face_lattice_check(p).empty());
  CHECK(orthant_hull({}, PolytopeContext::classical()).empty);
}

TEST_CASE("unbounded axis facets witness each coordinate direction (m >= 2)") {
  for (const char* text :
       {"Z^4+(Y-X)^4*Z^2+(Y+3*X)^8", "Z^3+(X^2+X*Y^2)*Z+X^2*Y",
        "Z^4+(Y^2+X*Y)*Z^2+X^4"}) {
    auto p = build_delta(eq(text), PolytopeContext::infinitesimal());
    for (int dir = 0; dir < p.m; ++dir) {
      bool witnessed = false;
      for (const auto& f : p.facets) {
        if (std::find(f.rays.begin(), f.rays.end(), dir) != f.rays.end()) {
          witnessed = true;
        }
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("face lattice is graded and closed") {
  auto p = build_delta(eq("Z^8+(Y^5+X*Y^4)*Z^3+X^5*Y*Z^2+(X^7+X^10)*Z+Y^10"),
                       PolytopeContext::infinitesimal());
  for (const auto& face : p.faces) {
    if (!face.compact || face.dim == 0) continue;
    bool has_subface = false;
    for (const auto& sub : p.faces) {
      if (!sub.compact || sub.dim != face.dim - 1) continue;
      if (std::includes(face.generators.begin(), face.generators.end(),
                        sub.generators.begin(), sub.generators.end())) {
        has_subface = true;
      }
    }
    CHECK(has_subface);
  }
  // every vertex index is a point index and lies on >= m facets
  for (int vi : p.vertex_indices) {
    int incident = 0;
    for (const auto& f : p.facets) {
      if (std::find(f.generators.begin(), f.generators.end(), vi) !=
          f.generators.end()) {
        ++incident;
      }
    }
    CHECK(incident >= p.m);
  }
}

TEST_CASE("vertex minimality: removing a vertex shrinks the hull") {
  auto pts = project(eq("Z^3+(X^2+X*Y^2)*Z+X^2*Y"),
                     PolytopeContext::infinitesimal());
  auto p = orthant_hull(pts, PolytopeContext::infinitesimal());
  for (int vi : p.vertex_indices) {
    std::vector<ProjectedPoint> rest;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      if (static_cast<int>(i) != vi) rest.push_back(p.points[i]);
    }
    auto smaller = orthant_hull(rest, PolytopeContext::infinitesimal());
    CHECK(membership(smaller, p.points[vi].coords).kind ==
          MembershipKind::Outside);
  }
}

TEST_CASE("m=3 mixed unbounded facet spanned by points and a ray") {
  // conv{(0,1,0),(1,0,0),(1,1,1)} + orthant: facet x1+x2 = 1 contains the
  // e3 ray and only two points.
  std::vector<ProjectedPoint> pts;
  auto mk = [](std::initializer_list<long> cs, std::uint32_t k) {
    ProjectedPoint pt;
    for (long c : cs) pt.coords.emplace_back(Rational(c));
    pt.provenance.push_back(
        ExponentVector{std::vector<std::uint32_t>{k, 0, 0}, k});
    return pt;
  };
  pts.push_back(mk({0, 1, 0}, 0));
  pts.push_back(mk({1, 0, 0}, 1));
  pts.push_back(mk({1, 1, 1}, 2));
  auto p = orthant_hull(pts, PolytopeContext::classical());
  bool found = false;
  for (const auto& f : p.facets) {
    if (f.rays == std::vector<int>{2} && f.generators.size() == 2) {
      // normal (1,1,0), offset 1
      CHECK(f.normal[0].constant_value() == 1);
      CHECK(f.normal[1].constant_value() == 1);
      CHECK(f.normal[2].is_zero());
      CHECK(f.offset.constant_value() == 1);
      found = true;
    }
  }
  CHECK(found);
  CHECK(face_lattice_check(p).empty());
}

TEST_CASE("face_lattice_check passes on paper polytopes") {
  for (const char* text :
       {"Z^2+X^3", "Z^4+(Y-X)^4*Z^2+(Y+3*X)^8", "Z^3+(X^2+X*Y^2)*Z+X^2*Y",
        "Z^4+(Y^2+X*Y)*Z^2+X^4",
        "Z^8+(Y^5+X*Y^4)*Z^3+X^5*Y*Z^2+(X^7+X^10)*Z+Y^10"}) {
    auto f = eq(text);
    CHECK(face_lattice_check(build_delta(f, PolytopeContext::classical())).empty());
    CHECK(face_lattice_check(build_delta(f, PolytopeContext::infinitesimal())).empty());
    CHECK(face_lattice_check(build_delta(f, PolytopeContext::at(Rational(1, 5)))).empty());
  }
}

TEST_CASE("face_lattice_check flags a corrupted lattice") {
  auto p = build_delta(eq("Z^4+(Y^2+X*Y)*Z^2+X^4"),
                       PolytopeContext::infinitesimal());
  REQUIRE(face_lattice_check(p).empty());
  NHPolytope corrupt = p;
  // Drop a compact face.
  for (std::size_t i = 0; i < corrupt.faces.size(); ++i) {
    if (corrupt.faces[i].compact && corrupt.faces[i].dim == 1) {
      corrupt.faces.erase(corrupt.faces.begin() + i);
      break;
    }
  }
  CHECK(!face_lattice_check(corrupt).empty());

  NHPolytope corrupt2 = p;
  // Claim an interior point is a face.
  Face fake;
  fake.dim = 0;
  fake.compact = true;
  fake.generators = {0};
  bool zero_is_vertex = false;
  for (int vi : p.vertex_indices) zero_is_vertex |= vi == 0;
  if (!zero_is_vertex) {
    corrupt2.faces.push_back(fake);
    CHECK(!face_lattice_check(corrupt2).empty());
  }
}

TEST_CASE("negative coordinates are rejected") {
  ProjectedPoint bad;
  bad.coords = rational_point({Rational(-1), Rational(0)});
  bad.provenance.push_back(ExponentVector{{0, 0}, 0});
  CHECK_THROWS_AS(orthant_hull({bad}, PolytopeContext::classical()),
                  ValidationError);
}

TEST_CASE("at-mode merges colliding points with a tie warning") {
  // 1/(1+e) and 2/(3+e) coincide exactly at e = 1.
  ProjectedPoint a, b;
  a.coords = {EpsNumber::fraction({BigInt(1)}, {BigInt(1), BigInt(1)})};
  a.provenance.push_back(ExponentVector{{1}, 1});
  b.coords = {EpsNumber::fraction({BigInt(2)}, {BigInt(3), BigInt(1)})};
  b.provenance.push_back(ExponentVector{{2}, 0});
  // 1/(1+e) = 2/(3+e) iff e = 1.
  auto p = orthant_hull({a, b}, PolytopeContext::at(Rational(1)));
  CHECK(p.points.size() == 1);
  REQUIRE(p.points[0].provenance.size() == 2);
  bool tie_warned = false;
  for (const auto& w : p.warnings) tie_warned |= w.find("tie") != std::string::npos;
  CHECK(tie_warned);

  auto q = orthant_hull({a, b}, PolytopeContext::at(Rational(1, 2)));
  CHECK(q.points.size() == 2);
}
