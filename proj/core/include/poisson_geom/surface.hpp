#pragma once

#include <array>

#include "poisson_geom/algebra.hpp"
#include "poisson_geom/harmonics.hpp"

namespace poisson_geom {

// Antipodal point pair on the sphere, the pseudo-sphere or the one-sheeted
// hyperboloid, stored as the canonical normalized representative: the metric
// square norm of rep is +/-1 and the first non-negligible coordinate among
// (z, y, x) is positive.
struct SurfacePoint {
  AlgebraKind kind = AlgebraKind::Sphere;
  Vec3 rep;
};

// Intersection of the surface with the plane metric-orthogonal to `normal`.
// The normal is kept un-normalized; geodesics are equal up to its scale and
// sign. For hyperbolic kinds the tag records the family only: one plane cuts
// geodesics on both hyperboloids.
struct Geodesic {
  AlgebraKind kind = AlgebraKind::Sphere;
  Vec3 normal;
};

// Vertices are raw representatives; all constructions are scale-covariant.
struct Triangle {
  AlgebraKind kind = AlgebraKind::Sphere;
  std::array<Vec3, 3> vertices;
};

// Flip the sign so the first coordinate of (z,y,x) larger than 1e-9 in
// magnitude is positive. Makes antipodal pairs comparable as values.
Vec3 canonical_sign(const Vec3& v);

// Unit Euclidean length plus the canonical sign rule; for comparing
// direction-like data (geodesic normals).
Vec3 canonical_unit(const Vec3& v);

// Normalize v onto the surface of the given kind. Hyperbolic kinds classify
// themselves: negative square norm selects the pseudo-sphere, positive the
// one-sheeted hyperboloid. Vectors on the light cone are rejected.
SurfacePoint surface_point(AlgebraKind kind, const Vec3& v);

Geodesic dual(const SurfacePoint& p);
SurfacePoint dual(const Geodesic& g);

Geodesic geodesic_through(const SurfacePoint& p, const SurfacePoint& q);
SurfacePoint meet(const Geodesic& g1, const Geodesic& g2);

// Plane-equation residual |<n,p>| / (|n||p|), zero when the pair lies on the
// geodesic.
double membership_residual(const Geodesic& g, const SurfacePoint& p);

// Euclidean distance between canonical representatives.
double point_distance(const SurfacePoint& p, const SurfacePoint& q);

// Cosine-like inner product, under the surface metric, of the tangents of
// the zero curves {F1=0} and {F2=0} at a common point. Vanishes exactly when
// the coefficient triples are orthogonal in the algebra's metric.
double orthogonality_residual(const Harmonic& f1, const Harmonic& f2);

Triangle make_triangle(AlgebraKind kind, const Vec3& v1, const Vec3& v2,
                       const Vec3& v3);

// A triangle is proper when no vertex is dual to its opposite side, i.e.
// every nested bracket of two vertices against the third stays away from
// zero.
bool is_proper(const Triangle& t);

// Altitude from vertex i: the geodesic through that vertex pair and the pair
// dual to the opposite side. Its normal is the nested bracket of the other
// two vertices against vertex i.
Geodesic altitude(const Triangle& t, int vertex_index);

// Common pair of the three altitudes, computed as the meet of the first two.
SurfacePoint orthocenter(const Triangle& t);

}  // namespace poisson_geom
