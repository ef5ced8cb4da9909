// Command-line front-end: analyze | polytope | compare | sweep |
// permissible | tchirnhausen | contract | segments | render.
//
// Exit codes: 0 success, 2 input/validation error, 1 internal invariant
// violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "nhpoly/analysis.hpp"
#include "nhpoly/errors.hpp"
#include "nhpoly/json_io.hpp"
#include "nhpoly/render.hpp"

namespace {

using namespace nhpoly;

struct CommonOpts {
  std::string equation;
  std::string input_file;
  std::string field = "q";
  int m_override = 0;

  void attach(CLI::App* cmd) {
    auto* eq = cmd->add_option("--equation", equation,
                               "equation text, e.g. \"Z^2+X^3\"");
    auto* in = cmd->add_option("--input", input_file,
                               "file containing the equation text");
    eq->excludes(in);
    cmd->add_option("--field", field, "coefficient field: q or fp:<p>")
        ->default_val("q");
    cmd->add_option("--m", m_override, "ambient X-dimension override");
  }

  WeierstrassEquation load() const {
    std::string text = equation;
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) throw ValidationError("cannot open input file " + input_file);
      std::string line, all;
      while (std::getline(in, line)) all += line + "\n";
      text = all;
    }
    if (text.empty()) {
      throw ValidationError("no equation given (use --equation or --input)");
    }
    std::optional<int> m;
    if (m_override > 0) m = m_override;
    return WeierstrassEquation::parse(text, FieldConfig::parse(field), m);
  }
};

PolytopeContext parse_epsilon(const std::string& text) {
  if (text == "inf" || text == "infinitesimal") {
    return PolytopeContext::infinitesimal();
  }
  Rational q = parse_rational(text);
  if (q == 0) return PolytopeContext::classical();
  if (q < 0) throw ValidationError("epsilon must be 'inf', 0 or positive");
  return PolytopeContext::at(q);
}

void emit_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string counts_string(const std::vector<int>& counts) {
  std::string s = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + "]";
}

int run(int argc, char** argv) {
  CLI::App app{"Newton-Hironaka polytopes of Weierstrass equations, exact "
               "classical and eps-perturbed"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string epsilon = "inf", epsilon_a = "0", epsilon_b = "inf";
  std::string json_path, out_path, vars_text, qmax_text = "10";
  std::string sample_text, format = "tikz", xmax_text, ymax_text;
  unsigned decimals = 6;
  int budget = 32;
  bool no_shade = false, no_points = false, no_ticks = false;

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  common.attach(analyze);
  analyze->add_option("--epsilon", epsilon, "inf | 0 | positive rational");
  analyze->add_option("--qmax", qmax_text, "sweep upper bound");
  analyze->add_option("--sample", sample_text, "display sample epsilon");
  analyze->add_option("--decimals", decimals, "display digits");
  analyze->add_option("--json", json_path, "JSON output path or -");

  auto* polytope = app.add_subcommand("polytope", "polytope dump");
  common.attach(polytope);
  polytope->add_option("--epsilon", epsilon, "inf | 0 | positive rational");
  polytope->add_option("--json", json_path, "JSON output path or -");

  auto* compare = app.add_subcommand("compare", "match compact faces");
  common.attach(compare);
  compare->add_option("--epsilon-a", epsilon_a, "inf | 0 | positive rational");
  compare->add_option("--epsilon-b", epsilon_b, "inf | 0 | positive rational");
  compare->add_option("--json", json_path, "JSON output path or -");

  auto* sweep = app.add_subcommand("sweep", "epsilon sweep over (0, qmax]");
  common.attach(sweep);
  sweep->add_option("--qmax", qmax_text, "upper bound");
  sweep->add_option("--json", json_path, "JSON output path or -");

  auto* permissible =
      app.add_subcommand("permissible", "coordinate-ideal permissibility");
  common.attach(permissible);
  permissible->add_option("--vars", vars_text,
                          "comma-separated X indices (default: all ideals)");
  permissible->add_option("--json", json_path, "JSON output path or -");

  auto* tchirn = app.add_subcommand("tchirnhausen", "kill the Z^(n-1) term");
  common.attach(tchirn);
  tchirn->add_option("--json", json_path, "JSON output path or -");

  auto* contract = app.add_subcommand("contract", "iterate vertex contractions");
  common.attach(contract);
  contract->add_option("--budget", budget, "iteration budget");
  contract->add_option("--json", json_path, "JSON output path or -");

  auto* segments = app.add_subcommand("segments", "slope -1 segment reports");
  common.attach(segments);
  segments->add_option("--json", json_path, "JSON output path or -");

  auto* render = app.add_subcommand("render", "TikZ/SVG figure (m = 2)");
  common.attach(render);
  render->add_option("--epsilon", epsilon, "inf | 0 | positive rational");
  render->add_option("--format", format, "tikz | svg");
  render->add_option("--sample", sample_text,
                     "sample epsilon for infinitesimal rendering");
  render->add_option("--decimals", decimals, "coordinate digits");
  render->add_option("--xmax", xmax_text, "viewport width");
  render->add_option("--ymax", ymax_text, "viewport height");
  render->add_option("--out", out_path, "output path or -");
  render->add_flag("--no-shade", no_shade, "omit the shaded region");
  render->add_flag("--no-points", no_points, "omit point markers");
  render->add_flag("--no-ticks", no_ticks, "omit axis ticks");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    WeierstrassEquation f = common.load();
    PolytopeContext ctx = parse_epsilon(epsilon);
    std::optional<Rational> sample;
    if (!sample_text.empty()) sample = parse_rational(sample_text);
    Json report =
        analysis_report(f, ctx, parse_rational(qmax_text), sample, decimals);
    NHPolytope p = build_delta(f, ctx);
    std::cout << "equation: " << f.to_string() << "\n"
              << "context: " << ctx.to_string() << "\n"
              << "compact faces by dim: " << counts_string(p.compact_face_counts())
              << "\n";
    emit_json(report, json_path.empty() ? "-" : json_path);
    return 0;
  }
  if (polytope->parsed()) {
    WeierstrassEquation f = common.load();
    PolytopeContext ctx = parse_epsilon(epsilon);
    NHPolytope p = build_delta(f, ctx);
    std::cout << "context: " << ctx.to_string() << "\n"
              << "points: " << p.points.size()
              << ", vertices: " << p.vertex_indices.size()
              << ", facets: " << p.facets.size() << ", compact faces by dim: "
              << counts_string(p.compact_face_counts()) << "\n";
    emit_json(to_json(p), json_path.empty() ? "-" : json_path);
    return 0;
  }
  if (compare->parsed()) {
    WeierstrassEquation f = common.load();
    CorrespondenceReport r = compare_polytopes(f, parse_epsilon(epsilon_a),
                                               parse_epsilon(epsilon_b));
    std::cout << "a: " << r.ctx_a.to_string() << " compact "
              << counts_string(r.counts_a) << "\n"
              << "b: " << r.ctx_b.to_string() << " compact "
              << counts_string(r.counts_b) << "\n"
              << "exact matches: " << r.exact.size()
              << ", splits: " << r.splits.size()
              << ", gained: " << r.unmatched_b.size()
              << (r.dimension_preserving_bijection ? " (bijection)" : "")
              << "\n";
    emit_json(to_json(r), json_path);
    return 0;
  }
  if (sweep->parsed()) {
    WeierstrassEquation f = common.load();
    SweepReport r = epsilon_sweep(f, parse_rational(qmax_text));
    std::cout << "thresholds:";
    for (const auto& t : r.thresholds) {
      std::cout << " " << rational_string(t.value) << (t.exact ? "" : "~");
    }
    if (r.thresholds.empty()) std::cout << " none";
    std::cout << "\nintervals: " << r.intervals.size()
              << ", leftmost matches infinitesimal: "
              << (r.leftmost_matches_infinitesimal ? "yes" : "no") << "\n";
    emit_json(to_json(r), json_path);
    return 0;
  }
  if (permissible->parsed()) {
    WeierstrassEquation f = common.load();
    Json table = Json::array();
    std::vector<std::vector<int>> ideals;
    if (!vars_text.empty()) {
      std::vector<int> vars;
      std::stringstream ss(vars_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) vars.push_back(std::stoi(tok) - 1);
      ideals.push_back(vars);
    } else {
      for (unsigned mask = 1; mask < (1u << f.m()); ++mask) {
        std::vector<int> vars;
        for (int l = 0; l < f.m(); ++l) {
          if (mask & (1u << l)) vars.push_back(l);
        }
        ideals.push_back(vars);
      }
    }
    for (const auto& vars : ideals) {
      PermissibilityReport r = is_permissible(f, vars);
      std::cout << "(Z";
      for (int v : r.vars) std::cout << "," << variable_name(v, f.m());
      std::cout << "): " << (r.permissible ? "permissible" : "NOT permissible")
                << "\n";
      table.push_back(to_json(r));
    }
    emit_json(table, json_path);
    return 0;
  }
  if (tchirn->parsed()) {
    WeierstrassEquation f = common.load();
    WeierstrassEquation g = tchirnhausen(f);
    std::cout << g.to_string() << "\n";
    emit_json(Json{{"input", f.to_string()}, {"result", g.to_string()}},
              json_path);
    return 0;
  }
  if (contract->parsed()) {
    WeierstrassEquation f = common.load();
    ContractionIteration it = iterate_contractions(f, budget);
    std::cout << "contractions applied: " << it.steps.size() << "\n"
              << "final: " << it.final_equation.to_string() << "\n"
              << (it.terminated ? "no contractible vertex remains"
                                : "iteration budget exhausted")
              << "\n";
    emit_json(to_json(it), json_path);
    return 0;
  }
  if (segments->parsed()) {
    WeierstrassEquation f = common.load();
    BinomialSegments s = detect_binomial_segments(f);
    std::cout << "slope -1 compact segments: " << s.segments.size() << "\n";
    for (const auto& seg : s.segments) {
      std::cout << "  face " << seg.face_index << ": "
                << seg.face_poly.to_string()
                << (seg.is_binomial ? "  [binomial]" : "") << "\n";
    }
    emit_json(to_json(s), json_path);
    return 0;
  }
  if (render->parsed()) {
    WeierstrassEquation f = common.load();
    PolytopeContext ctx = parse_epsilon(epsilon);
    NHPolytope p = build_delta(f, ctx);
    RenderSpec spec;
    spec.format = format == "svg" ? RenderSpec::Format::Svg
                                  : RenderSpec::Format::Tikz;
    if (format != "svg" && format != "tikz") {
      throw ValidationError("format must be tikz or svg");
    }
    if (!sample_text.empty()) {
      spec.sample_q = parse_rational(sample_text);
    } else if (ctx.mode == PolytopeContext::Mode::At) {
      spec.sample_q = ctx.q;
    } else if (ctx.mode == PolytopeContext::Mode::Infinitesimal) {
      spec.sample_q = infinitesimal_safe_sample(f);
    }
    spec.decimals = decimals;
    if (!xmax_text.empty()) spec.x_max = parse_rational(xmax_text);
    if (!ymax_text.empty()) spec.y_max = parse_rational(ymax_text);
    spec.shaded_region = !no_shade;
    spec.point_markers = !no_points;
    spec.axis_ticks = !no_ticks;
    spec.comment = "equation: " + f.to_string() + "; context: " +
                   ctx.to_string() + "; sample eps = " +
                   rational_string(spec.sample_q) +
                   (sample_text.empty() &&
                            ctx.mode == PolytopeContext::Mode::Infinitesimal
                        ? " (half the first predicate root; combinatorially "
                          "faithful to the blurred polytope)"
                        : "");
    emit_text(render_figure(p, spec), out_path);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n"
              << "self-check: please report the exact command line\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
