#pragma once

#include <array>
#include <string>

#include "poisson_geom/algebra.hpp"
#include "poisson_geom/surface.hpp"

namespace poisson_geom {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

// Stereographic projection from the south pole (0,0,-1) onto the plane z=0:
// (x,y,z) -> (x/(1+z), y/(1+z)). Sphere points only.
PlanarPoint stereographic(const SurfacePoint& p);

enum class FigureKind {
  SphericalAltitudes,
  DiscAltitudes,
  EhDuality,
  Pappus,
  TomihisaIncidence,
};

// Accepts the CLI spelling ("spherical-altitudes", ...). Unknown names are
// usage errors.
FigureKind figure_kind_from_name(const std::string& name);
const char* to_string(FigureKind kind);

// Geometry inputs for one figure; fields beyond the active ones are ignored.
struct FigureSpec {
  FigureKind kind = FigureKind::SphericalAltitudes;

  std::array<Vec3, 3> triangle{};        // spherical-/disc-altitudes
  // Absolute of the disc figure, upper triangle (c00,c01,c02,c11,c12,c22);
  // defaults to the unit circle. Must have an ellipse image in the plane.
  std::array<double, 6> disc_conic = {1.0, 0.0, 0.0, 1.0, 0.0, -1.0};
  Vec3 eh_point{};                       // eh-duality
  std::array<Vec3, 3> pappus_a{};        // pappus
  std::array<Vec3, 3> pappus_b{};
  std::array<Vec3, 5> tomihisa_points{}; // tomihisa-incidence

  static FigureSpec defaults(FigureKind kind);
};

// Deterministic SVG document for the named figure. The residual values that
// certify the drawn incidences are recorded in an SVG comment.
std::string render_figure(const FigureSpec& spec);

}  // namespace poisson_geom
