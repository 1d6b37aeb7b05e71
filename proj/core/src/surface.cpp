#include "poisson_geom/surface.hpp"

#include <cmath>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

namespace {

constexpr double kSignTol = 1e-9;
constexpr double kConeTol = 1e-9;
constexpr double kIndependenceTol = 1e-12;
constexpr double kPropernessTol = 1e-9;

bool is_surface_kind(AlgebraKind kind) {
  return kind == AlgebraKind::Sphere || kind == AlgebraKind::PseudoSphere ||
         kind == AlgebraKind::DeSitter;
}

void require_surface_kind(AlgebraKind kind, const char* what) {
  if (!is_surface_kind(kind)) {
    throw UsageError(std::string(what) +
                     ": expected a surface kind (sphere or hyperboloid)");
  }
}

bool same_family(AlgebraKind a, AlgebraKind b) {
  return (a == AlgebraKind::Sphere) == (b == AlgebraKind::Sphere);
}

// Bracket used for incidence constructions of one family. The sign factors
// of the per-kind laws do not change planes or pairs.
Vec3 family_cross(AlgebraKind kind, const Vec3& u, const Vec3& v) {
  return cross(metric_signature(kind), u, v);
}

// (x,y,z) -> (x,y,-z); the hyperbolic metric as a linear map.
Vec3 flip_z(const Vec3& v) { return {v.x, v.y, -v.z}; }

}  // namespace

Vec3 canonical_sign(const Vec3& v) {
  double lead = v.z;
  if (std::abs(lead) <= kSignTol) lead = v.y;
  if (std::abs(lead) <= kSignTol) lead = v.x;
  return lead < 0.0 ? -v : v;
}

Vec3 canonical_unit(const Vec3& v) {
  const double n = euclidean_norm(v);
  if (n == 0.0) throw UsageError("cannot canonicalize the zero vector");
  return canonical_sign(v / n);
}

SurfacePoint surface_point(AlgebraKind kind, const Vec3& v) {
  require_surface_kind(kind, "surface_point");
  if (!all_finite(v)) throw UsageError("surface_point: non-finite input");
  const double ee = euclidean_norm_sq(v);
  if (ee == 0.0) throw UsageError("surface_point: zero vector");

  if (kind == AlgebraKind::Sphere) {
    return {AlgebraKind::Sphere, canonical_sign(v / std::sqrt(ee))};
  }

  const double q = dot(HYPERBOLIC, v, v);
  if (std::abs(q) <= kConeTol * ee) {
    throw ConeVectorError("vector lies on the light cone");
  }
  const AlgebraKind actual =
      q < 0.0 ? AlgebraKind::PseudoSphere : AlgebraKind::DeSitter;
  return {actual, canonical_sign(v / std::sqrt(std::abs(q)))};
}

Geodesic dual(const SurfacePoint& p) { return {p.kind, p.rep}; }

SurfacePoint dual(const Geodesic& g) { return surface_point(g.kind, g.normal); }

Geodesic geodesic_through(const SurfacePoint& p, const SurfacePoint& q) {
  if (!same_family(p.kind, q.kind)) {
    throw UsageError("geodesic_through: points of different geometries");
  }
  const Vec3 n = family_cross(p.kind, p.rep, q.rep);
  if (euclidean_norm(n) <=
      kIndependenceTol * euclidean_norm(p.rep) * euclidean_norm(q.rep)) {
    throw DegenerateInputError(
        "geodesic_through: coincident or antipodal pairs");
  }
  return {p.kind, n};
}

SurfacePoint meet(const Geodesic& g1, const Geodesic& g2) {
  if (!same_family(g1.kind, g2.kind)) {
    throw UsageError("meet: geodesics of different geometries");
  }
  const Vec3 n = family_cross(g1.kind, g1.normal, g2.normal);
  if (euclidean_norm(n) <=
      kIndependenceTol * euclidean_norm(g1.normal) * euclidean_norm(g2.normal)) {
    throw DegenerateInputError("meet: geodesics with dependent normals");
  }
  return surface_point(g1.kind, n);
}

double membership_residual(const Geodesic& g, const SurfacePoint& p) {
  if (!same_family(g.kind, p.kind)) {
    throw UsageError("membership_residual: mixed geometries");
  }
  const double num = std::abs(dot(metric_signature(g.kind), g.normal, p.rep));
  return num / (euclidean_norm(g.normal) * euclidean_norm(p.rep));
}

double point_distance(const SurfacePoint& p, const SurfacePoint& q) {
  return euclidean_norm(p.rep - q.rep);
}

double orthogonality_residual(const Harmonic& f1, const Harmonic& f2) {
  if (f1.kind != f2.kind) {
    throw UsageError("orthogonality_residual: harmonics of different kinds");
  }
  require_surface_kind(f1.kind, "orthogonality_residual");
  const Vec3 a = f1.coeffs, b = f2.coeffs;

  // Common point of the zero sets: both planes contain the Euclidean cross
  // direction of the coefficient triples.
  const Vec3 c = cross(EUCLIDEAN, a, b);
  const double cn = euclidean_norm(c);
  if (cn <= kIndependenceTol * euclidean_norm(a) * euclidean_norm(b)) {
    throw NoIntersectionError(
        "orthogonality_residual: zero sets do not cross transversally");
  }

  Vec3 p;
  Signature metric = EUCLIDEAN;
  if (f1.kind == AlgebraKind::Sphere) {
    p = c / cn;
  } else {
    const double q = dot(HYPERBOLIC, c, c);
    if (std::abs(q) <= kConeTol * cn * cn) {
      throw NoIntersectionError(
          "orthogonality_residual: zero sets meet only on the light cone");
    }
    p = c / std::sqrt(std::abs(q));
    metric = HYPERBOLIC;
  }

  // Curve tangents at p: inside the zero plane of the coefficients and
  // inside the surface's tangent plane.
  Vec3 t1, t2;
  if (f1.kind == AlgebraKind::Sphere) {
    t1 = cross(EUCLIDEAN, a, p);
    t2 = cross(EUCLIDEAN, b, p);
  } else {
    const Vec3 jp = flip_z(p);
    t1 = cross(EUCLIDEAN, a, jp);
    t2 = cross(EUCLIDEAN, b, jp);
  }

  const double inner = dot(metric, t1, t2);
  const double n1 = std::abs(dot(metric, t1, t1));
  const double n2 = std::abs(dot(metric, t2, t2));
  double denom = std::sqrt(n1 * n2);
  const double chart_scale = euclidean_norm(t1) * euclidean_norm(t2);
  if (denom <= 1e-12 * chart_scale) {
    // Lightlike tangent on the one-sheeted hyperboloid; fall back to the
    // Euclidean scale so the residual stays finite.
    denom = chart_scale;
  }
  return inner / denom;
}

Triangle make_triangle(AlgebraKind kind, const Vec3& v1, const Vec3& v2,
                       const Vec3& v3) {
  require_surface_kind(kind, "make_triangle");
  const std::array<Vec3, 3> v = {v1, v2, v3};
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = v[i];
    const Vec3& b = v[(i + 1) % 3];
    if (euclidean_norm(family_cross(kind, a, b)) <=
        kIndependenceTol * euclidean_norm(a) * euclidean_norm(b)) {
      throw DegenerateInputError("make_triangle: dependent vertex pair");
    }
  }
  return {kind, v};
}

bool is_proper(const Triangle& t) {
  const double scale = euclidean_norm(t.vertices[0]) *
                       euclidean_norm(t.vertices[1]) *
                       euclidean_norm(t.vertices[2]);
  for (int i = 0; i < 3; ++i) {
    const Vec3& fi = t.vertices[i];
    const Vec3& fj = t.vertices[(i + 1) % 3];
    const Vec3& fk = t.vertices[(i + 2) % 3];
    const Vec3 nested = family_cross(t.kind, family_cross(t.kind, fj, fk), fi);
    if (euclidean_norm(nested) <= kPropernessTol * scale) return false;
  }
  return true;
}

Geodesic altitude(const Triangle& t, int vertex_index) {
  if (vertex_index < 0 || vertex_index > 2) {
    throw UsageError("altitude: vertex index must be 0, 1 or 2");
  }
  if (!is_proper(t)) {
    throw ImproperTriangleError("altitude: triangle has a vertex dual to its "
                                "opposite side");
  }
  const Vec3& fi = t.vertices[vertex_index];
  const Vec3& fj = t.vertices[(vertex_index + 1) % 3];
  const Vec3& fk = t.vertices[(vertex_index + 2) % 3];
  return {t.kind, family_cross(t.kind, family_cross(t.kind, fj, fk), fi)};
}

SurfacePoint orthocenter(const Triangle& t) {
  const Geodesic g1 = altitude(t, 0);
  const Geodesic g2 = altitude(t, 1);
  return meet(g1, g2);
}

}  // namespace poisson_geom
