#pragma once

#include <array>
#include <string>

#include "poisson_geom/algebra.hpp"

namespace poisson_geom {

// The four Poisson algebras of first-degree harmonics. Each tag fixes a
// coordinate chart, a basis (f1,f2,f3), an analytic Poisson bracket and the
// equivalent algebraic bracket law on coefficient triples.
enum class AlgebraKind {
  Sphere,        // f = (sin t cos p, sin t sin p, cos t) on the unit sphere
  PseudoSphere,  // f = (sinh x cos p, sinh x sin p, cosh x), upper sheet
  DeSitter,      // f = (cosh x cos p, cosh x sin p, sinh x), one-sheeted
  Quadratic,     // f = (2pq, p^2-q^2, p^2+q^2) on the symplectic plane
};

constexpr std::array<AlgebraKind, 4> all_algebra_kinds() {
  return {AlgebraKind::Sphere, AlgebraKind::PseudoSphere, AlgebraKind::DeSitter,
          AlgebraKind::Quadratic};
}

const char* to_string(AlgebraKind kind);

// Metric carried by the algebra's coefficient space: Euclidean for the
// sphere, hyperbolic for the other three.
constexpr Signature metric_signature(AlgebraKind kind) {
  return kind == AlgebraKind::Sphere ? EUCLIDEAN : HYPERBOLIC;
}

// Closed-form bracket law on coefficient triples. This is the single source
// of truth for the basis tables reproduced by the analytic brackets.
Vec3 bracket_law(AlgebraKind kind, const Vec3& u, const Vec3& v);

// First-degree harmonic F = X f1 + Y f2 + Z f3 of one algebra.
struct Harmonic {
  AlgebraKind kind = AlgebraKind::Sphere;
  Vec3 coeffs;
};

// Chart coordinate: (theta, phi) for Sphere with theta in (0,pi);
// (chi, phi) for the hyperboloids; (p, q) for Quadratic.
struct SurfaceCoord {
  double u1 = 0.0;
  double u2 = 0.0;
};

// Binary quadratic form a p^2 + 2b pq + c q^2.
struct QuadraticForm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend constexpr bool operator==(const QuadraticForm&,
                                   const QuadraticForm&) = default;
};

// Basis values (f1,f2,f3) at a chart point. For the three surfaces these are
// also the ambient coordinates of the surface point.
Vec3 basis_values(AlgebraKind kind, SurfaceCoord s);

double eval(const Harmonic& f, SurfaceCoord s);

// {F,G} as a harmonic of the same kind, via the kind's bracket law.
Harmonic poisson_algebraic(const Harmonic& f, const Harmonic& g);

// {F,G} evaluated at a chart point with hand-derived analytic basis
// derivatives (no finite differences). Agrees with the algebraic law.
double poisson_numeric(const Harmonic& f, const Harmonic& g, SurfaceCoord s);

// Normalized L^2 product on the sphere, by quadrature that is exact for
// products of first-degree harmonics. Sphere kind only.
double l2_inner(const Harmonic& f, const Harmonic& g);

// Coefficients (X,Y,Z) of the form in the harmonic basis, and back.
constexpr Vec3 quadratic_convert(const QuadraticForm& q) {
  return {q.b, 0.5 * (q.a - q.c), 0.5 * (q.a + q.c)};
}

constexpr QuadraticForm quadratic_coefficients(const Vec3& v) {
  return {v.y + v.z, v.x, v.z - v.y};
}

// Minus the polarized discriminant: bb' - (ac' + ca')/2. Coincides exactly
// with the hyperbolic scalar product of the converted triples.
constexpr double discriminant_scalar(const QuadraticForm& q,
                                     const QuadraticForm& r) {
  return q.b * r.b - 0.5 * (q.a * r.c + q.c * r.a);
}

}  // namespace poisson_geom
