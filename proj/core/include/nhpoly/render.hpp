#ifndef NHPOLY_RENDER_HPP
#define NHPOLY_RENDER_HPP

#include <optional>
#include <string>

#include "nhpoly/hull.hpp"

namespace nhpoly {

// Figure emission for m = 2 polytopes: a shaded region clipped to the
// viewport, the boundary chain, one marker per projected point (coincident
// classical points get a multiplicity badge), and integer axis ticks.
struct RenderSpec {
  enum class Format { Tikz, Svg };

  Format format = Format::Tikz;
  // Viewport; when absent, one unit beyond the furthest point.
  std::optional<Rational> x_max, y_max;
  // Placement of eps-dependent coordinates. Required for perturbed
  // polytopes in infinitesimal mode.
  Rational sample_q = Rational(1, 2);
  unsigned decimals = 6;
  bool shaded_region = true;
  bool point_markers = true;
  bool axis_ticks = true;
  std::string comment;  // metadata line embedded in the output
};

std::string render_figure(const NHPolytope& p, const RenderSpec& spec);

}  // namespace nhpoly

#endif
