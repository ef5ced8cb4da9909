#include "nhpoly/render.hpp"

#include <algorithm>
#include <sstream>

#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {

struct Figure {
  Rational xmax, ymax;
  std::vector<std::pair<Rational, Rational>> region;  // closed fill path
  struct Marker {
    Rational x, y;
    std::size_t multiplicity;
  };
  std::vector<Marker> markers;
  bool empty_note = false;
};

Rational ceil_plus_one(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt fl = num / den;
  if (num < 0) fl -= (num % den != 0) ? 1 : 0;
  return Rational(fl + 1);
}

Figure layout(const NHPolytope& p, const RenderSpec& spec) {
  Figure fig;
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& pt : p.points) {
    pts.emplace_back(pt.coords[0].evaluate(spec.sample_q),
                     pt.coords[1].evaluate(spec.sample_q));
  }
  Rational maxc = 1;
  for (const auto& [x, y] : pts) maxc = std::max(maxc, std::max(x, y));
  fig.xmax = spec.x_max.value_or(ceil_plus_one(maxc));
  fig.ymax = spec.y_max.value_or(ceil_plus_one(maxc));

  if (p.empty) {
    fig.empty_note = true;
    fig.region = {{Rational(0), Rational(0)},
                  {fig.xmax, Rational(0)},
                  {fig.xmax, fig.ymax},
                  {Rational(0), fig.ymax}};
    return fig;
  }

  // Boundary chain: vertices by increasing x.
  std::vector<std::pair<Rational, Rational>> chain;
  for (int vi : p.vertex_indices) {
    chain.emplace_back(pts[vi].first, pts[vi].second);
  }
  std::sort(chain.begin(), chain.end());
  const Rational y_last = chain.back().second;
  const Rational x_first = chain.front().first;
  fig.region.emplace_back(fig.xmax, y_last);
  fig.region.emplace_back(fig.xmax, fig.ymax);
  fig.region.emplace_back(x_first, fig.ymax);
  for (const auto& v : chain) fig.region.push_back(v);

  for (std::size_t i = 0; i < pts.size(); ++i) {
    fig.markers.push_back({pts[i].first, pts[i].second,
                           p.points[i].provenance.size()});
  }
  return fig;
}

long floor_long(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt fl = num / den;
  return fl.convert_to<long>();
}

std::string tikz_output(const Figure& fig, const RenderSpec& spec) {
  std::ostringstream os;
  auto dec = [&](const Rational& v) { return decimal_string(v, spec.decimals); };
  if (!spec.comment.empty()) os << "% " << spec.comment << "\n";
  os << "\\begin{tikzpicture}\n";
  os << "\\tikzset{\n"
        "    every point/.style = {circle, inner sep={1.75\\pgflinewidth},\n"
        "        opacity=1, draw, solid, fill\n"
        "    },\n"
        "    point/.style={insert path={node[every point, #1]{}}}, "
        "point/.default={},\n"
        "    point name/.style = {insert path={coordinate (#1)}},\n"
        "}\n";
  if (spec.shaded_region) {
    os << "\\fill[black!20] ";
    for (std::size_t i = 0; i < fig.region.size(); ++i) {
      if (i) os << " -- ";
      os << "(" << dec(fig.region[i].first) << "," << dec(fig.region[i].second)
         << ")";
    }
    os << " -- cycle;\n";
  }
  os << "\\draw[->] (0.000000,0.000000) -- (" << dec(fig.xmax)
     << ",0.000000);\n";
  os << "\\draw[->] (0.000000,0.000000) -- (0.000000," << dec(fig.ymax)
     << ");\n";
  if (spec.axis_ticks) {
    for (long t = 0; t < floor_long(fig.xmax); ++t) {
      os << "\\draw[very thin] (" << t << ",0) -- (" << t
         << ",-3pt) node[below] {$" << t << "$};\n";
    }
    for (long t = 1; t < floor_long(fig.ymax); ++t) {
      os << "\\draw[very thin] (0," << t << ") -- (-3pt," << t
         << ") node[left] {$" << t << "$};\n";
    }
  }
  if (spec.point_markers) {
    for (const auto& mk : fig.markers) {
      os << "\\draw (" << dec(mk.x) << "," << dec(mk.y) << ") [point]";
      if (mk.multiplicity > 1) {
        os << " node[above right] {\\tiny$\\times " << mk.multiplicity
           << "$}";
      }
      os << ";\n";
    }
  }
  if (fig.empty_note) {
    os << "\\node at (" << dec(fig.xmax / 2) << "," << dec(fig.ymax / 2)
       << ") {reduced support empty: the region is the whole quadrant};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string svg_output(const Figure& fig, const RenderSpec& spec) {
  // Unit scale 100 px, margin 40 px, y axis flipped.
  const double scale = 100.0;
  const double margin = 40.0;
  auto todbl = [](const Rational& v) {
    return boost::multiprecision::numerator(v).convert_to<double>() /
           boost::multiprecision::denominator(v).convert_to<double>();
  };
  const double w = todbl(fig.xmax) * scale + 2 * margin;
  const double h = todbl(fig.ymax) * scale + 2 * margin;
  auto px = [&](const Rational& x) { return margin + todbl(x) * scale; };
  auto py = [&](const Rational& y) { return h - margin - todbl(y) * scale; };
  auto fmt = [](double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!spec.comment.empty()) os << "<!-- " << spec.comment << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " "
     << fmt(h) << "\">\n";
  os << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" "
        "refX=\"6\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" "
        "fill=\"black\"/></marker></defs>\n";
  if (spec.shaded_region) {
    os << "<polygon fill=\"#cccccc\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < fig.region.size(); ++i) {
      if (i) os << ' ';
      os << fmt(px(fig.region[i].first)) << ',' << fmt(py(fig.region[i].second));
    }
    os << "\"/>\n";
  }
  os << "<line x1=\"" << fmt(px(Rational(0))) << "\" y1=\""
     << fmt(py(Rational(0))) << "\" x2=\"" << fmt(px(fig.xmax)) << "\" y2=\""
     << fmt(py(Rational(0)))
     << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  os << "<line x1=\"" << fmt(px(Rational(0))) << "\" y1=\""
     << fmt(py(Rational(0))) << "\" x2=\"" << fmt(px(Rational(0))) << "\" y2=\""
     << fmt(py(fig.ymax))
     << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
  if (spec.axis_ticks) {
    for (long t = 0; t < floor_long(fig.xmax); ++t) {
      os << "<line x1=\"" << fmt(px(Rational(t))) << "\" y1=\""
         << fmt(py(Rational(0))) << "\" x2=\"" << fmt(px(Rational(t)))
         << "\" y2=\"" << fmt(py(Rational(0)) + 5) << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << fmt(px(Rational(t))) << "\" y=\""
         << fmt(py(Rational(0)) + 20)
         << "\" font-size=\"12\" text-anchor=\"middle\">" << t << "</text>\n";
    }
    for (long t = 1; t < floor_long(fig.ymax); ++t) {
      os << "<line x1=\"" << fmt(px(Rational(0))) << "\" y1=\""
         << fmt(py(Rational(t))) << "\" x2=\"" << fmt(px(Rational(0)) - 5)
         << "\" y2=\"" << fmt(py(Rational(t))) << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << fmt(px(Rational(0)) - 10) << "\" y=\""
         << fmt(py(Rational(t)) + 4)
         << "\" font-size=\"12\" text-anchor=\"end\">" << t << "</text>\n";
    }
  }
  if (spec.point_markers) {
    for (const auto& mk : fig.markers) {
      os << "<circle cx=\"" << fmt(px(mk.x)) << "\" cy=\"" << fmt(py(mk.y))
         << "\" r=\"3.5\" fill=\"black\"/>\n";
      if (mk.multiplicity > 1) {
        os << "<text x=\"" << fmt(px(mk.x) + 6) << "\" y=\""
           << fmt(py(mk.y) - 6) << "\" font-size=\"10\">x" << mk.multiplicity
           << "</text>\n";
      }
    }
  }
  if (fig.empty_note) {
    os << "<text x=\"" << fmt(w / 2) << "\" y=\"" << fmt(h / 2)
       << "\" font-size=\"12\" text-anchor=\"middle\">reduced support empty: "
          "the region is the whole quadrant</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_figure(const NHPolytope& p, const RenderSpec& spec) {
  if (!p.empty && p.m != 2) {
    throw ValidationError("figure rendering is only available for m = 2");
  }
  if (spec.sample_q <= 0) throw ValidationError("sample_q must be positive");
  Figure fig = layout(p, spec);
  return spec.format == RenderSpec::Format::Tikz ? tikz_output(fig, spec)
                                                 : svg_output(fig, spec);
}

}  // namespace nhpoly
