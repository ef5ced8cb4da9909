#include "nhpoly/json_io.hpp"

#include <limits>

#include "nhpoly/errors.hpp"

namespace nhpoly {

Json to_json(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const Rational& v) { return rational_string(v); }

Json to_json(const EpsNumber& v) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : v.num()) num.push_back(to_json(c));
  for (const auto& c : v.den()) den.push_back(to_json(c));
  if (v.num().empty()) num.push_back(0);
  return Json{{"num", num}, {"den", den}};
}

Json to_json(const OrderingContext& c) {
  if (c.mode == OrderingContext::Mode::Infinitesimal) {
    return Json{{"mode", "infinitesimal"}};
  }
  return Json{{"mode", "at"}, {"q", rational_string(c.q)}};
}

Json to_json(const PolytopeContext& c) {
  switch (c.mode) {
    case PolytopeContext::Mode::Classical:
      return Json{{"mode", "classical"}};
    case PolytopeContext::Mode::Infinitesimal:
      return Json{{"mode", "infinitesimal"}};
    case PolytopeContext::Mode::At:
      return Json{{"mode", "at"}, {"q", rational_string(c.q)}};
  }
  throw InternalError("bad context");
}

Json to_json(const ExponentVector& e) {
  Json i = Json::array();
  for (auto x : e.i) i.push_back(x);
  return Json{{"i", i}, {"k", e.k}};
}

namespace {

Json exponents_json(const std::vector<ExponentVector>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json int_array(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

}  // namespace

Json to_json(const NHPolytope& p) {
  Json out;
  out["context"] = to_json(p.context);
  out["m"] = p.m;
  out["empty"] = p.empty;
  Json points = Json::array();
  for (const auto& pt : p.points) {
    Json coords = Json::array();
    for (const auto& c : pt.coords) coords.push_back(to_json(c));
    points.push_back(Json{{"coords", coords},
                          {"provenance", exponents_json(pt.provenance)}});
  }
  out["points"] = points;
  out["vertices"] = int_array(p.vertex_indices);
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json normal = Json::array();
    for (const auto& c : f.normal) normal.push_back(to_json(c));
    facets.push_back(Json{{"normal", normal},
                          {"offset", to_json(f.offset)},
                          {"generators", int_array(f.generators)},
                          {"rays", int_array(f.rays)},
                          {"compact", f.compact}});
  }
  out["facets"] = facets;
  Json compact = Json::array(), unbounded = Json::array();
  for (const auto& f : p.faces) {
    Json face{{"dim", f.dim},
              {"generators", int_array(f.generators)},
              {"facet_indices", int_array(f.facet_indices)}};
    if (f.compact) {
      compact.push_back(face);
    } else {
      face["rays"] = int_array(f.rays);
      unbounded.push_back(face);
    }
  }
  out["compact_faces"] = compact;
  // Unbounded faces are reported but excluded from rationality
  // classification.
  out["unbounded_faces"] = unbounded;
  if (!p.warnings.empty()) out["warnings"] = p.warnings;
  return out;
}

Json to_json(const RationalityVerdict& v) {
  Json out;
  switch (v.kind) {
    case Rationality::Rational: {
      out["kind"] = "rational";
      out["k"] = *v.common_k;
      Json sys = Json::array();
      for (const auto& h : v.system) {
        Json normal = Json::array();
        for (const auto& c : h.normal) normal.push_back(to_json(c));
        sys.push_back(Json{{"normal", normal}, {"offset", to_json(h.offset)}});
      }
      out["system"] = sys;
      break;
    }
    case Rationality::NonRational:
      out["kind"] = "non_rational";
      if (v.witness) {
        out["witness"] = Json::array(
            {to_json(v.witness->first), to_json(v.witness->second)});
      }
      break;
    case Rationality::NotApplicable:
      out["kind"] = "not_applicable";
      out["reason"] = v.reason;
      break;
  }
  out["criteria_agree"] = v.criteria_agree;
  return out;
}

Json to_json(const TangentConeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"point", to_json(row.point)},
                        {"on_initial_form", row.on_initial_form},
                        {"in_band", row.in_band},
                        {"above_one", row.above_one},
                        {"in_refined_band", row.in_refined_band}});
  }
  return Json{{"initial_form", r.initial_form.to_string()},
              {"tchirnhausen_reduced", r.tchirnhausen_reduced},
              {"rows", rows},
              {"band_ok", r.band_ok}};
}

Json to_json(const PermissibilityReport& r) {
  Json vars = Json::array();
  for (int v : r.vars) vars.push_back(v + 1);  // 1-based in reports
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"point", to_json(row.point)},
                        {"band_class", row.band_class},
                        {"others_zero", row.others_zero}});
  }
  return Json{{"vars", vars},
              {"permissible", r.permissible},
              {"violating_terms", exponents_json(r.violating_terms)},
              {"region_check", r.region_check},
              {"criteria_agree", r.criteria_agree},
              {"rows", rows}};
}

Json to_json(const DistanceBoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"point", to_json(row.point)},
           {"d2", rational_string(row.d2)},
           {"bound2", rational_string(row.bound2)},
           {"strict", row.strict}};
    if (row.refined_bound2) {
      j["refined_bound2"] = rational_string(*row.refined_bound2);
      j["refined_strict"] = row.refined_strict;
    }
    rows.push_back(j);
  }
  return Json{{"q", rational_string(r.q)},
              {"tchirnhausen_reduced", r.tchirnhausen_reduced},
              {"rows", rows},
              {"all_strict", r.all_strict}};
}

namespace {

Json contraction_json(const Contraction& c) {
  Json vertex = Json::array(), b = Json::array();
  for (const auto& x : c.vertex) vertex.push_back(rational_string(x));
  for (auto x : c.b) b.push_back(x);
  return Json{{"vertex", vertex},
              {"b", b},
              {"lambda", c.lambda.to_string()},
              {"result", c.result.to_string()}};
}

Json unresolved_json(const std::vector<UnresolvedCandidate>& v) {
  Json out = Json::array();
  for (const auto& u : v) {
    Json vertex = Json::array();
    for (const auto& x : u.vertex) vertex.push_back(rational_string(x));
    out.push_back(Json{{"vertex", vertex}, {"reason", u.reason}});
  }
  return out;
}

}  // namespace

Json to_json(const ContractionSearch& s) {
  Json contractions = Json::array();
  for (const auto& c : s.contractions) contractions.push_back(contraction_json(c));
  return Json{{"contractions", contractions},
              {"unresolved", unresolved_json(s.unresolved)}};
}

Json to_json(const ContractionIteration& it) {
  Json steps = Json::array();
  for (const auto& s : it.steps) steps.push_back(contraction_json(s.applied));
  return Json{{"steps", steps},
              {"final_equation", it.final_equation.to_string()},
              {"terminated", it.terminated},
              {"unresolved", unresolved_json(it.unresolved)}};
}

Json to_json(const BinomialSegments& s) {
  Json segments = Json::array();
  for (const auto& seg : s.segments) {
    Json comps = Json::array();
    for (const auto& c : seg.components) {
      Json factors = Json::array();
      for (const auto& [alpha, e] : c.linear_factors) {
        factors.push_back(Json{{"alpha", alpha.to_string()}, {"e", e}});
      }
      comps.push_back(Json{{"k", c.k},
                           {"constant", c.constant.to_string()},
                           {"x_power", c.x_power},
                           {"linear_factors", factors},
                           {"residual", c.residual.to_string()},
                           {"binomial_alone", c.binomial_alone}});
    }
    segments.push_back(Json{{"face_index", seg.face_index},
                            {"face_polynomial", seg.face_poly.to_string()},
                            {"components", comps},
                            {"is_binomial", seg.is_binomial}});
  }
  return Json{{"delta0", to_json(s.delta0)}, {"segments", segments}};
}

Json to_json(const FaceSignature& sig) {
  Json out = Json::array();
  for (const auto& [dim, prov] : sig) {
    out.push_back(Json{{"dim", dim}, {"provenance", exponents_json(prov)}});
  }
  return out;
}

Json to_json(const CorrespondenceReport& r) {
  Json exact = Json::array();
  for (const auto& m : r.exact) {
    exact.push_back(Json{{"a", m.a_face}, {"b", m.b_face}});
  }
  Json splits = Json::array();
  for (const auto& s : r.splits) {
    splits.push_back(Json{{"a", s.a_face}, {"b", int_array(s.b_faces)}});
  }
  Json out{{"ctx_a", to_json(r.ctx_a)},
           {"ctx_b", to_json(r.ctx_b)},
           {"counts_a", int_array(r.counts_a)},
           {"counts_b", int_array(r.counts_b)},
           {"exact", exact},
           {"splits", splits},
           {"unmatched_a", int_array(r.unmatched_a)},
           {"unmatched_b", int_array(r.unmatched_b)},
           {"bijection", r.dimension_preserving_bijection}};
  if (r.threshold_bound) {
    out["threshold_bound"] = rational_string(*r.threshold_bound);
    out["below_threshold"] = r.below_threshold;
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

Json to_json(const SweepReport& r) {
  Json thresholds = Json::array();
  for (const auto& t : r.thresholds) {
    Json j{{"exact", t.exact}, {"value", rational_string(t.value)}};
    if (!t.exact) {
      j["isolating_interval"] =
          Json::array({rational_string(t.lo), rational_string(t.hi)});
      j["rationality_unverified"] = t.rationality_unverified;
    }
    thresholds.push_back(j);
  }
  Json intervals = Json::array();
  for (const auto& iv : r.intervals) {
    Json counts = Json::array();
    for (int c : iv.face_counts) counts.push_back(c);
    intervals.push_back(Json{{"lo", rational_string(iv.lo)},
                             {"hi", rational_string(iv.hi)},
                             {"lo_is_threshold", iv.lo_is_threshold},
                             {"sample", rational_string(iv.sample)},
                             {"face_counts", counts},
                             {"signature", to_json(iv.signature)}});
  }
  return Json{{"q_max", rational_string(r.q_max)},
              {"thresholds", thresholds},
              {"intervals", intervals},
              {"infinitesimal_signature", to_json(r.infinitesimal_signature)},
              {"leftmost_matches_infinitesimal",
               r.leftmost_matches_infinitesimal}};
}

Json analysis_report(const WeierstrassEquation& f, const PolytopeContext& ctx,
                     const Rational& q_max, std::optional<Rational> sample_q,
                     unsigned decimals) {
  Json out;
  out["equation"] = Json{{"text", f.to_string()},
                         {"n", f.n()},
                         {"m", f.m()},
                         {"field", f.field().to_string()}};
  out["context"] = to_json(ctx);

  NHPolytope p = build_delta(f, ctx);
  out["polytope"] = to_json(p);

  Json faces = Json::array();
  for (int fi : p.compact_face_indices()) {
    Json face{{"index", fi},
              {"dim", p.faces[fi].dim},
              {"generators", int_array(p.faces[fi].generators)},
              {"provenance", exponents_json(p.face_provenance(fi))},
              {"face_polynomial", face_polynomial(p, fi, f).to_string()}};
    if (ctx.mode == PolytopeContext::Mode::Infinitesimal) {
      face["rationality"] = to_json(classify_face(p, fi));
    }
    faces.push_back(face);
  }
  out["faces"] = faces;
  if (ctx.mode == PolytopeContext::Mode::Infinitesimal && !p.empty) {
    auto audit = nonrational_face_audit(p);
    Json entries = Json::array();
    for (const auto& e : audit.entries) {
      entries.push_back(Json{{"face_index", e.face_index},
                             {"dim", e.dim},
                             {"generator_count", e.generator_count},
                             {"count_ok", e.count_ok},
                             {"interior_empty_ok", e.interior_empty_ok}});
    }
    out["non_rational_audit"] = Json{{"entries", entries}, {"ok", audit.ok}};
  }

  out["band"] = to_json(tangent_cone(f));

  if (f.m() <= 4) {
    Json table = Json::array();
    for (unsigned mask = 1; mask < (1u << f.m()); ++mask) {
      std::vector<int> vars;
      for (int l = 0; l < f.m(); ++l) {
        if (mask & (1u << l)) vars.push_back(l);
      }
      table.push_back(to_json(is_permissible(f, vars)));
    }
    out["permissibility"] = table;
  } else {
    out["permissibility_note"] = "skipped for m > 4";
  }

  out["sweep"] = to_json(epsilon_sweep(f, q_max));

  // Decimal display coordinates.
  Rational q = sample_q ? *sample_q : infinitesimal_safe_sample(f);
  if (ctx.mode == PolytopeContext::Mode::At) q = ctx.q;
  Json display;
  display["sample_q"] = rational_string(q);
  display["decimals"] = decimals;
  display["note"] =
      "default sample is half the first predicate root, which is "
      "combinatorially faithful to the blurred polytope";
  Json pts = Json::array();
  for (const auto& pt : p.points) {
    Json coords = Json::array();
    for (const auto& c : pt.coords) coords.push_back(to_decimal(c, q, decimals));
    pts.push_back(coords);
  }
  display["points"] = pts;
  Json verts = Json::array();
  for (int vi : p.vertex_indices) {
    Json coords = Json::array();
    for (const auto& c : p.points[vi].coords) {
      coords.push_back(to_decimal(c, q, decimals));
    }
    verts.push_back(coords);
  }
  display["vertices"] = verts;
  out["display"] = display;
  return out;
}

}  // namespace nhpoly
