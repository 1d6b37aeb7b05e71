#include "poisson_geom/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "poisson_geom/errors.hpp"
#include "poisson_geom/identities.hpp"
#include "poisson_geom/projective.hpp"
#include "poisson_geom/svg.hpp"

namespace poisson_geom {

namespace {

constexpr const char* kThin = "fill:none;stroke:#444444;stroke-width:0.012";
constexpr const char* kSide = "fill:none;stroke:#000000;stroke-width:0.02";
constexpr const char* kDashed =
    "fill:none;stroke:#b03030;stroke-width:0.02;stroke-dasharray:0.08 0.05";
constexpr const char* kBold = "fill:none;stroke:#000000;stroke-width:0.035";
constexpr const char* kVertexFill = "fill:#1050c0;stroke:none";
constexpr const char* kPointFill = "fill:#000000;stroke:none";
constexpr const char* kConcurrencyFill = "fill:#c01010;stroke:none";
constexpr const char* kTextStyle =
    "font-family:monospace;font-size:0.18px;fill:#333333";

struct Box {
  double x0, y0, x1, y1;
};

// SVG y axis points down; all figures flip it once here.
PlanarPoint flip(PlanarPoint p) { return {p.x, -p.y}; }

std::string fmt_residual(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Affine view of a homogeneous triple; nullopt for directions at infinity.
std::optional<PlanarPoint> affine_of(const Vec3& h) {
  if (std::abs(h.z) <= 1e-9 * euclidean_norm(h)) return std::nullopt;
  return PlanarPoint{h.x / h.z, h.y / h.z};
}

// Intersections of the affine line ux + vy + w = 0 with a box, as a drawable
// segment.
std::optional<std::pair<PlanarPoint, PlanarPoint>> clip_line(const Vec3& l,
                                                             const Box& box) {
  std::vector<PlanarPoint> hits;
  auto push = [&](double x, double y) {
    if (x < box.x0 - 1e-9 || x > box.x1 + 1e-9 || y < box.y0 - 1e-9 ||
        y > box.y1 + 1e-9) {
      return;
    }
    for (const PlanarPoint& p : hits) {
      if (std::abs(p.x - x) < 1e-9 && std::abs(p.y - y) < 1e-9) return;
    }
    hits.push_back({x, y});
  };
  if (std::abs(l.y) > 1e-12) {
    push(box.x0, -(l.z + l.x * box.x0) / l.y);
    push(box.x1, -(l.z + l.x * box.x1) / l.y);
  }
  if (std::abs(l.x) > 1e-12) {
    push(-(l.z + l.y * box.y0) / l.x, box.y0);
    push(-(l.z + l.y * box.y1) / l.x, box.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  // Keep the two farthest apart.
  std::pair<PlanarPoint, PlanarPoint> best{hits[0], hits[1]};
  double best_d = -1.0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const double d = std::hypot(hits[i].x - hits[j].x, hits[i].y - hits[j].y);
      if (d > best_d) {
        best_d = d;
        best = {hits[i], hits[j]};
      }
    }
  }
  if (best_d < 1e-9) return std::nullopt;
  return best;
}

void draw_segment(SvgWriter& svg, const std::pair<PlanarPoint, PlanarPoint>& s,
                  const std::string& cls, const std::string& style) {
  const PlanarPoint a = flip(s.first), b = flip(s.second);
  svg.line(a.x, a.y, b.x, b.y, cls, style);
}

// Image of the great circle with plane normal n under the stereographic
// projection: a circle of center (a/c, b/c) and radius 1/|c| for unit
// n=(a,b,c), degenerating to a line through the origin when the circle
// passes through the projection pole.
void draw_great_circle(SvgWriter& svg, const Vec3& normal, const Box& box,
                       const std::string& cls, const std::string& style) {
  const Vec3 n = normal / euclidean_norm(normal);
  if (std::abs(n.z) > 1e-6) {
    const PlanarPoint c = flip({n.x / n.z, n.y / n.z});
    svg.circle(c.x, c.y, 1.0 / std::abs(n.z), cls, style);
    return;
  }
  if (const auto seg = clip_line({n.x, n.y, 0.0}, box)) {
    draw_segment(svg, *seg, cls, style);
  }
}

void draw_marker(SvgWriter& svg, PlanarPoint p, double r,
                 const std::string& cls, const std::string& style) {
  const PlanarPoint q = flip(p);
  svg.marker(q.x, q.y, r, cls, style);
}

std::string render_spherical_altitudes(const FigureSpec& spec) {
  Triangle tri = make_triangle(AlgebraKind::Sphere, spec.triangle[0],
                               spec.triangle[1], spec.triangle[2]);
  std::array<SurfacePoint, 3> verts;
  for (int i = 0; i < 3; ++i) {
    verts[i] = surface_point(AlgebraKind::Sphere, tri.vertices[i]);
  }
  std::array<Geodesic, 3> sides, alts;
  for (int i = 0; i < 3; ++i) {
    sides[i] = geodesic_through(verts[(i + 1) % 3], verts[(i + 2) % 3]);
    alts[i] = altitude(tri, i);
  }
  const SurfacePoint h = orthocenter(tri);
  const double concurrency = membership_residual(alts[2], h);

  const Box box{-4.0, -4.0, 4.0, 4.0};
  SvgWriter svg(box.x0, box.y0, box.x1 - box.x0, box.y1 - box.y0);
  svg.comment("residuals: altitude_concurrency=" + fmt_residual(concurrency));
  svg.circle(0.0, 0.0, 1.0, "reference", kThin);
  for (int i = 0; i < 3; ++i) {
    draw_great_circle(svg, sides[i].normal, box, "side", kSide);
  }
  for (int i = 0; i < 3; ++i) {
    draw_great_circle(svg, alts[i].normal, box, "altitude", kDashed);
  }
  for (int i = 0; i < 3; ++i) {
    const PlanarPoint p = stereographic(verts[i]);
    draw_marker(svg, p, 0.05, "vertex", kVertexFill);
  }
  draw_marker(svg, stereographic(h), 0.06, "concurrency", kConcurrencyFill);
  svg.text(box.x0 + 0.2, box.y1 - 0.2,
           "stereographic projection from the south pole", kTextStyle);
  return svg.finish();
}

// Center, semi-axes and axis angle of a conic whose affine image is an
// ellipse.
struct EllipseShape {
  PlanarPoint center;
  double rx, ry;
  double angle_deg;
};

EllipseShape ellipse_shape(const Conic& conic) {
  const std::array<double, 6> u = conic.upper_triangle();
  const double c00 = u[0], c01 = u[1], c02 = u[2], c11 = u[3], c12 = u[4],
               c22 = u[5];
  const double block_det = c00 * c11 - c01 * c01;
  if (block_det <= 1e-12 * conic.max_abs_entry() * conic.max_abs_entry()) {
    throw DegenerateInputError(
        "absolute image is not an ellipse in the drawing plane");
  }
  const double xc = (-c02 * c11 + c12 * c01) / block_det;
  const double yc = (-c12 * c00 + c02 * c01) / block_det;
  const double value = c02 * xc + c12 * yc + c22;
  const double diff = c00 - c11;
  const double split = std::sqrt(diff * diff + 4.0 * c01 * c01);
  const double l1 = 0.5 * (c00 + c11 + split);
  const double l2 = 0.5 * (c00 + c11 - split);
  const double r1_sq = -value / l1;
  const double r2_sq = -value / l2;
  if (r1_sq <= 0.0 || r2_sq <= 0.0) {
    throw DegenerateInputError(
        "absolute image is not an ellipse in the drawing plane");
  }
  const double angle = 0.5 * std::atan2(2.0 * c01, diff);
  return {{xc, yc}, std::sqrt(r1_sq), std::sqrt(r2_sq),
          angle * 180.0 / 3.14159265358979323846};
}

// Chord the affine line cuts out of the conic; falls back to the box clip
// when they do not meet.
std::optional<std::pair<PlanarPoint, PlanarPoint>> conic_chord(
    const Conic& conic, const Vec3& l, const Box& box) {
  Vec3 q1 = cross(EUCLIDEAN, l, {1.0, 0.0, 0.0});
  if (euclidean_norm(q1) < 1e-9 * euclidean_norm(l)) {
    q1 = cross(EUCLIDEAN, l, {0.0, 1.0, 0.0});
  }
  const Vec3 q2 = cross(EUCLIDEAN, l, q1);
  const Vec3 cq1 = conic.apply(q1), cq2 = conic.apply(q2);
  const double a = dot(EUCLIDEAN, q1, cq1);
  const double b = dot(EUCLIDEAN, q1, cq2);
  const double c = dot(EUCLIDEAN, q2, cq2);
  const double disc = b * b - a * c;
  if (disc <= 0.0) return clip_line(l, box);
  const double sq = std::sqrt(disc);
  Vec3 p1, p2;
  if (std::abs(c) >= std::abs(a)) {
    p1 = q1 + ((-b + sq) / c) * q2;
    p2 = q1 + ((-b - sq) / c) * q2;
  } else {
    p1 = q2 + ((-b + sq) / a) * q1;
    p2 = q2 + ((-b - sq) / a) * q1;
  }
  const auto e1 = affine_of(p1);
  const auto e2 = affine_of(p2);
  if (!e1 || !e2) return clip_line(l, box);
  return std::pair<PlanarPoint, PlanarPoint>{*e1, *e2};
}

std::string render_disc_altitudes(const FigureSpec& spec) {
  const Conic conic = Conic::from_upper_triangle(spec.disc_conic);
  if (conic.is_definite()) {
    throw EmptyConicError("the absolute has no real points");
  }
  std::array<ProjPoint, 3> tri;
  for (int i = 0; i < 3; ++i) tri[i] = project(spec.triangle[i]);
  std::array<ProjLine, 3> sides, alts;
  for (int i = 0; i < 3; ++i) {
    sides[i] = join(tri[(i + 1) % 3], tri[(i + 2) % 3]);
    alts[i] = projective_altitude(conic, tri, i);
  }
  const ProjPoint h = meet(alts[0], alts[1]);
  const double concurrency = concurrent(alts[0], alts[1], alts[2]);

  const EllipseShape shape = ellipse_shape(conic);
  const double extent =
      std::max({2.2, std::abs(shape.center.x) + shape.rx + 1.0,
                std::abs(shape.center.y) + shape.ry + 1.0});
  const Box box{-extent, -extent, extent, extent};
  SvgWriter svg(box.x0, box.y0, box.x1 - box.x0, box.y1 - box.y0);
  svg.comment("residuals: altitude_concurrency=" + fmt_residual(concurrency));
  if (std::abs(shape.rx - shape.ry) < 1e-12) {
    svg.circle(shape.center.x, -shape.center.y, shape.rx, "absolute", kSide);
  } else {
    // The y flip mirrors the rotation angle.
    svg.ellipse(shape.center.x, -shape.center.y, shape.rx, shape.ry,
                -shape.angle_deg, "absolute", kSide);
  }
  auto draw_chord = [&](const ProjLine& l, const std::string& cls,
                        const std::string& style) {
    if (const auto seg = conic_chord(conic, l.h, box)) {
      draw_segment(svg, *seg, cls, style);
    }
  };
  for (int i = 0; i < 3; ++i) draw_chord(sides[i], "side", kSide);
  for (int i = 0; i < 3; ++i) draw_chord(alts[i], "altitude", kDashed);
  for (int i = 0; i < 3; ++i) {
    if (const auto p = affine_of(tri[i].h)) {
      draw_marker(svg, *p, 0.035, "vertex", kVertexFill);
    }
  }
  if (const auto p = affine_of(h.h)) {
    draw_marker(svg, *p, 0.045, "concurrency", kConcurrencyFill);
  }
  svg.text(box.x0 + 0.1, box.y1 - 0.1, "projection to the plane Z=1",
           kTextStyle);
  return svg.finish();
}

std::string render_eh_duality(const FigureSpec& spec) {
  const ProjPoint a = project(spec.eh_point);
  const ProjLine dual_h = line_of(a.h, DualityModel::Hyperbolic);
  const ProjLine dual_e = line_of(a.h, DualityModel::Euclidean);
  const ProjLine reflected = eh_reflect(dual_h);
  const Vec3 u = dual_e.h / euclidean_norm(dual_e.h);
  const Vec3 v = reflected.h / euclidean_norm(reflected.h);
  const double residual =
      std::min(euclidean_norm(u - v), euclidean_norm(u + v));

  const Box box{-3.0, -3.0, 3.0, 3.0};
  SvgWriter svg(box.x0, box.y0, box.x1 - box.x0, box.y1 - box.y0);
  svg.comment("residuals: central_symmetry=" + fmt_residual(residual));
  svg.circle(0.0, 0.0, 1.0, "absolute", kSide);
  if (const auto seg = clip_line(dual_h.h, box)) {
    draw_segment(svg, *seg, "dual-h", kDashed);
  }
  if (const auto seg = clip_line(dual_e.h, box)) {
    draw_segment(svg, *seg, "dual-e", kBold);
  }
  if (const auto p = affine_of(a.h)) {
    draw_marker(svg, *p, 0.05, "point", kPointFill);
  }
  if (const auto p = affine_of(eh_reflect(a).h)) {
    draw_marker(svg, *p, 0.05, "reflected-point", kVertexFill);
  }
  draw_marker(svg, {0.0, 0.0}, 0.04, "origin", kConcurrencyFill);
  svg.text(box.x0 + 0.1, box.y1 - 0.1,
           "dualities of the plane Z=1 with the unit-circle absolute",
           kTextStyle);
  return svg.finish();
}

std::string render_pappus(const FigureSpec& spec) {
  std::array<ProjPoint, 3> a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = project(spec.pappus_a[i]);
    b[i] = project(spec.pappus_b[i]);
  }
  const PappusConfig cfg = make_pappus_config(a, b);
  const PappusResult result = pappus_check(cfg);

  // Viewport from the finite configuration points, padded.
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  auto absorb = [&](const Vec3& h) {
    if (const auto p = affine_of(h)) {
      if (first) {
        x0 = x1 = p->x;
        y0 = y1 = p->y;
        first = false;
      } else {
        x0 = std::min(x0, p->x);
        x1 = std::max(x1, p->x);
        y0 = std::min(y0, p->y);
        y1 = std::max(y1, p->y);
      }
    }
  };
  for (int i = 0; i < 3; ++i) absorb(a[i].h);
  for (int i = 0; i < 3; ++i) absorb(b[i].h);
  for (int i = 0; i < 3; ++i) absorb(result.cross[i].h);
  const Box box{x0 - 1.0, y0 - 1.0, x1 + 1.0, y1 + 1.0};

  SvgWriter svg(box.x0, -box.y1, box.x1 - box.x0, box.y1 - box.y0);
  svg.comment("residuals: pappus_collinearity=" + fmt_residual(result.residual));
  auto draw_line = [&](const ProjLine& l, const std::string& cls,
                       const std::string& style) {
    if (const auto seg = clip_line(l.h, box)) {
      draw_segment(svg, *seg, cls, style);
    }
  };
  draw_line(cfg.l1, "base-line", kSide);
  draw_line(cfg.l2, "base-line", kSide);
  const std::array<std::pair<int, int>, 6> splits = {
      {std::pair{1, 2}, {2, 1}, {0, 2}, {2, 0}, {0, 1}, {1, 0}}};
  for (const auto& [i, j] : splits) {
    draw_line(join(a[i], b[j]), "cross-line", kThin);
  }
  draw_line(join(result.cross[0], result.cross[2]), "pappus-line", kBold);
  for (int i = 0; i < 3; ++i) {
    if (const auto p = affine_of(a[i].h)) {
      draw_marker(svg, *p, 0.07, "point-a", kPointFill);
    }
    if (const auto p = affine_of(b[i].h)) {
      draw_marker(svg, *p, 0.07, "point-b", kPointFill);
    }
    if (const auto p = affine_of(result.cross[i].h)) {
      draw_marker(svg, *p, 0.07, "point-c", kConcurrencyFill);
    }
  }
  return svg.finish();
}

std::string render_tomihisa_incidence(const FigureSpec& spec) {
  std::array<ProjPoint, 5> pts;
  for (int i = 0; i < 5; ++i) pts[i] = project(spec.tomihisa_points[i]);
  const double residual = tomihisa_geometric(pts);

  const ProjPoint& f2 = pts[1];
  const ProjPoint& f4 = pts[3];
  const std::array<int, 3> cyc = {0, 2, 4};
  std::array<ProjLine, 3> bold;
  std::array<ProjPoint, 3> inner;
  for (int k = 0; k < 3; ++k) {
    inner[k] = meet(join(f2, pts[cyc[(k + 1) % 3]]),
                    join(f4, pts[cyc[(k + 2) % 3]]));
    bold[k] = join(pts[cyc[k]], inner[k]);
  }
  const ProjPoint common = meet(bold[0], bold[1]);

  double x0 = -2.5, x1 = 2.5, y0 = -2.5, y1 = 2.5;
  const Box box{x0, y0, x1, y1};
  SvgWriter svg(box.x0, box.y0, box.x1 - box.x0, box.y1 - box.y0);
  svg.comment("residuals: line_concurrency=" + fmt_residual(residual));
  auto draw_line = [&](const ProjLine& l, const std::string& cls,
                       const std::string& style) {
    if (const auto seg = clip_line(l.h, box)) {
      draw_segment(svg, *seg, cls, style);
    }
  };
  for (const int k : cyc) {
    draw_line(join(f2, pts[k]), "construction-line", kThin);
    draw_line(join(f4, pts[k]), "construction-line", kThin);
  }
  for (int k = 0; k < 3; ++k) {
    draw_line(bold[k], "tomihisa-line", kBold);
  }
  for (int i = 0; i < 5; ++i) {
    if (const auto p = affine_of(pts[i].h)) {
      draw_marker(svg, *p, 0.06, "point", kPointFill);
    }
  }
  for (int k = 0; k < 3; ++k) {
    if (const auto p = affine_of(inner[k].h)) {
      draw_marker(svg, *p, 0.045, "inner-point", kVertexFill);
    }
  }
  if (const auto p = affine_of(common.h)) {
    draw_marker(svg, *p, 0.07, "concurrency", kConcurrencyFill);
  }
  return svg.finish();
}

}  // namespace

PlanarPoint stereographic(const SurfacePoint& p) {
  if (p.kind != AlgebraKind::Sphere) {
    throw UsageError("stereographic: sphere points only");
  }
  const Vec3 u = p.rep / euclidean_norm(p.rep);
  if (1.0 + u.z <= 1e-12) {
    throw AtPoleError("stereographic: point is the projection pole");
  }
  return {u.x / (1.0 + u.z), u.y / (1.0 + u.z)};
}

FigureKind figure_kind_from_name(const std::string& name) {
  if (name == "spherical-altitudes") return FigureKind::SphericalAltitudes;
  if (name == "disc-altitudes") return FigureKind::DiscAltitudes;
  if (name == "eh-duality") return FigureKind::EhDuality;
  if (name == "pappus") return FigureKind::Pappus;
  if (name == "tomihisa-incidence") return FigureKind::TomihisaIncidence;
  throw UsageError("unknown figure name: " + name);
}

const char* to_string(FigureKind kind) {
  switch (kind) {
    case FigureKind::SphericalAltitudes:
      return "spherical-altitudes";
    case FigureKind::DiscAltitudes:
      return "disc-altitudes";
    case FigureKind::EhDuality:
      return "eh-duality";
    case FigureKind::Pappus:
      return "pappus";
    case FigureKind::TomihisaIncidence:
      return "tomihisa-incidence";
  }
  return "?";
}

FigureSpec FigureSpec::defaults(FigureKind kind) {
  FigureSpec spec;
  spec.kind = kind;
  switch (kind) {
    case FigureKind::SphericalAltitudes:
      spec.triangle = {Vec3{0.9, 0.15, 0.4}, Vec3{-0.2, 0.95, 0.3},
                       Vec3{0.25, -0.4, 0.88}};
      break;
    case FigureKind::DiscAltitudes:
      spec.triangle = {Vec3{0.3, 0.1, 1.2}, Vec3{-0.2, 0.45, 1.1},
                       Vec3{0.1, -0.5, 1.3}};
      break;
    case FigureKind::EhDuality:
      spec.eh_point = {1.6, 0.6, 1.0};
      break;
    case FigureKind::Pappus:
      spec.pappus_a = {Vec3{0.0, 0.0, 1.0}, Vec3{1.0, 0.0, 1.0},
                       Vec3{3.0, 0.0, 1.0}};
      spec.pappus_b = {Vec3{0.0, 1.0, 1.0}, Vec3{2.0, 1.0, 1.0},
                       Vec3{3.0, 1.0, 1.0}};
      break;
    case FigureKind::TomihisaIncidence:
      spec.tomihisa_points = {Vec3{0.2, 0.1, 1.0}, Vec3{1.3, -0.4, 1.0},
                              Vec3{0.9, 1.1, 1.0}, Vec3{-0.8, 0.7, 1.0},
                              Vec3{-0.3, -0.9, 1.0}};
      break;
  }
  return spec;
}

std::string render_figure(const FigureSpec& spec) {
  switch (spec.kind) {
    case FigureKind::SphericalAltitudes:
      return render_spherical_altitudes(spec);
    case FigureKind::DiscAltitudes:
      return render_disc_altitudes(spec);
    case FigureKind::EhDuality:
      return render_eh_duality(spec);
    case FigureKind::Pappus:
      return render_pappus(spec);
    case FigureKind::TomihisaIncidence:
      return render_tomihisa_incidence(spec);
  }
  throw UsageError("unknown figure kind");
}

}  // namespace poisson_geom
