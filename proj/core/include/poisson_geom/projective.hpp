#pragma once

#include <array>
#include <utility>

#include "poisson_geom/algebra.hpp"

namespace poisson_geom {

// Point of the projective plane, homogeneous triple defined up to scale.
struct ProjPoint {
  Vec3 h;
};

// Line of the projective plane as a covector triple; p lies on l iff the
// plain componentwise product-sum of the triples vanishes.
struct ProjLine {
  Vec3 h;
};

// Which 3-space metric a duality is inherited from.
enum class DualityModel { Euclidean, Hyperbolic };

enum class ConicRegion { Lobachevsky, DeSitter, OnConic };

ProjPoint project(const Vec3& v);

// Affine view (X/Z, Y/Z); points at infinity are rejected.
std::pair<double, double> affine_view(const ProjPoint& p);

// Projective line cut by the plane metric-orthogonal to `normal`: the
// Euclidean duality keeps the triple, the hyperbolic one flips Z.
ProjLine line_of(const Vec3& normal, DualityModel model);

// Point whose metric-orthogonal plane projects to the given line.
ProjPoint dual_point(const ProjLine& l, DualityModel model);

// Central reflection about the affine origin: (X,Y,Z) -> (-X,-Y,Z) on
// points, (u,v,w) -> (-u,-v,w) on lines. Carries one duality to the other.
ProjPoint eh_reflect(const ProjPoint& p);
ProjLine eh_reflect(const ProjLine& l);

// Nondegenerate symmetric 3x3 coefficient grid; p lies on the conic iff
// p^T C p = 0.
class Conic {
 public:
  // Entries (c00, c01, c02, c11, c12, c22) of the upper triangle.
  static Conic from_upper_triangle(const std::array<double, 6>& u);
  static Conic unit_circle();  // diag(1, 1, -1)

  std::array<double, 6> upper_triangle() const;
  double det() const { return det_; }
  double max_abs_entry() const;

  // C * v and adj(C) * v; the adjugate realizes the inverse up to scale.
  Vec3 apply(const Vec3& v) const;
  Vec3 apply_adjugate(const Vec3& v) const;

  double evaluate(const ProjPoint& p) const;

  // True when the coefficient matrix is definite, i.e. the conic carries no
  // real point.
  bool is_definite() const;

 private:
  Conic(const std::array<double, 6>& u, double det);
  std::array<double, 6> u_;
  double det_;
};

ProjLine polar(const Conic& c, const ProjPoint& p);
ProjPoint pole(const Conic& c, const ProjLine& l);

// Side of the absolute: the focus-containing complement component is the
// Lobachevsky disc, the other one the De Sitter world.
ConicRegion classify_region(const Conic& c, const ProjPoint& p);

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// |det| of the three triples after unit normalization; zero means incident.
double collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
double concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n);

// Line joining vertex i with the pole of the opposite side.
ProjLine projective_altitude(const Conic& c,
                             const std::array<ProjPoint, 3>& vertices, int i);

// Two point triples on two lines, all six points distinct and away from the
// common point of the lines.
struct PappusConfig {
  ProjLine l1, l2;
  std::array<ProjPoint, 3> a, b;
};

// Validates incidence (within 1e-12 after unit normalization), distinctness
// and position relative to l1 ^ l2.
PappusConfig make_pappus_config(const std::array<ProjPoint, 3>& a,
                                const std::array<ProjPoint, 3>& b);

struct PappusResult {
  double residual;                 // collinearity of the three cross points
  std::array<ProjPoint, 3> cross;  // c1, c2, c3
};

PappusResult pappus_check(const PappusConfig& cfg);

}  // namespace poisson_geom
