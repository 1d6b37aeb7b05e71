#include "poisson_geom/projective.hpp"

#include <algorithm>
#include <cmath>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kOnConicTol = 1e-10;
constexpr double kImproperTol = 1e-9;

Vec3 unit(const Vec3& v) {
  const double n = euclidean_norm(v);
  if (n == 0.0) throw UsageError("zero homogeneous triple");
  return v / n;
}

void require_nonzero(const Vec3& v, const char* what) {
  if (!all_finite(v) || euclidean_norm_sq(v) == 0.0) {
    throw UsageError(std::string(what) + ": homogeneous triple must be "
                                         "nonzero and finite");
  }
}

Vec3 checked_cross(const Vec3& a, const Vec3& b, const char* what) {
  const Vec3 c = cross(EUCLIDEAN, a, b);
  if (euclidean_norm(c) <=
      kDegenerateTol * euclidean_norm(a) * euclidean_norm(b)) {
    throw DegenerateInputError(std::string(what) + ": coincident arguments");
  }
  return c;
}

double unit_det(const Vec3& a, const Vec3& b, const Vec3& c) {
  return std::abs(triple(EUCLIDEAN, unit(a), unit(b), unit(c)));
}

bool proportional(const Vec3& a, const Vec3& b, double tol) {
  return euclidean_norm(cross(EUCLIDEAN, unit(a), unit(b))) <= tol;
}

}  // namespace

ProjPoint project(const Vec3& v) {
  require_nonzero(v, "project");
  return {v};
}

std::pair<double, double> affine_view(const ProjPoint& p) {
  require_nonzero(p.h, "affine_view");
  if (std::abs(p.h.z) <= kDegenerateTol * euclidean_norm(p.h)) {
    throw AtInfinityError("affine view of a point at infinity");
  }
  return {p.h.x / p.h.z, p.h.y / p.h.z};
}

ProjLine line_of(const Vec3& normal, DualityModel model) {
  require_nonzero(normal, "line_of");
  if (model == DualityModel::Euclidean) return {normal};
  return {{normal.x, normal.y, -normal.z}};
}

ProjPoint dual_point(const ProjLine& l, DualityModel model) {
  require_nonzero(l.h, "dual_point");
  if (model == DualityModel::Euclidean) return {l.h};
  return {{l.h.x, l.h.y, -l.h.z}};
}

ProjPoint eh_reflect(const ProjPoint& p) {
  return {{-p.h.x, -p.h.y, p.h.z}};
}

ProjLine eh_reflect(const ProjLine& l) { return {{-l.h.x, -l.h.y, l.h.z}}; }

Conic::Conic(const std::array<double, 6>& u, double det) : u_(u), det_(det) {}

Conic Conic::from_upper_triangle(const std::array<double, 6>& u) {
  for (const double e : u) {
    if (!std::isfinite(e)) {
      throw UsageError("conic entries must be finite");
    }
  }
  const double c00 = u[0], c01 = u[1], c02 = u[2], c11 = u[3], c12 = u[4],
               c22 = u[5];
  const double det = c00 * (c11 * c22 - c12 * c12) -
                     c01 * (c01 * c22 - c12 * c02) +
                     c02 * (c01 * c12 - c11 * c02);
  double scale = 0.0;
  for (const double e : u) scale = std::max(scale, std::abs(e));
  if (scale == 0.0 || std::abs(det) <= 1e-12 * scale * scale * scale) {
    throw DegenerateConicError("conic matrix is singular");
  }
  return Conic(u, det);
}

Conic Conic::unit_circle() {
  return from_upper_triangle({1.0, 0.0, 0.0, 1.0, 0.0, -1.0});
}

std::array<double, 6> Conic::upper_triangle() const { return u_; }

double Conic::max_abs_entry() const {
  double scale = 0.0;
  for (const double e : u_) scale = std::max(scale, std::abs(e));
  return scale;
}

Vec3 Conic::apply(const Vec3& v) const {
  const double c00 = u_[0], c01 = u_[1], c02 = u_[2], c11 = u_[3], c12 = u_[4],
               c22 = u_[5];
  return {c00 * v.x + c01 * v.y + c02 * v.z,
          c01 * v.x + c11 * v.y + c12 * v.z,
          c02 * v.x + c12 * v.y + c22 * v.z};
}

Vec3 Conic::apply_adjugate(const Vec3& v) const {
  const double c00 = u_[0], c01 = u_[1], c02 = u_[2], c11 = u_[3], c12 = u_[4],
               c22 = u_[5];
  const double a00 = c11 * c22 - c12 * c12;
  const double a01 = c02 * c12 - c01 * c22;
  const double a02 = c01 * c12 - c02 * c11;
  const double a11 = c00 * c22 - c02 * c02;
  const double a12 = c01 * c02 - c00 * c12;
  const double a22 = c00 * c11 - c01 * c01;
  return {a00 * v.x + a01 * v.y + a02 * v.z,
          a01 * v.x + a11 * v.y + a12 * v.z,
          a02 * v.x + a12 * v.y + a22 * v.z};
}

double Conic::evaluate(const ProjPoint& p) const {
  const Vec3 cp = apply(p.h);
  return cp.x * p.h.x + cp.y * p.h.y + cp.z * p.h.z;
}

bool Conic::is_definite() const {
  const double c00 = u_[0], c01 = u_[1], c11 = u_[3];
  const double minor2 = c00 * c11 - c01 * c01;
  const bool pos = c00 > 0.0 && minor2 > 0.0 && det_ > 0.0;
  const bool neg = c00 < 0.0 && minor2 > 0.0 && det_ < 0.0;
  return pos || neg;
}

ProjLine polar(const Conic& c, const ProjPoint& p) {
  require_nonzero(p.h, "polar");
  return {c.apply(p.h)};
}

ProjPoint pole(const Conic& c, const ProjLine& l) {
  require_nonzero(l.h, "pole");
  return {c.apply_adjugate(l.h)};
}

ConicRegion classify_region(const Conic& c, const ProjPoint& p) {
  require_nonzero(p.h, "classify_region");
  if (c.is_definite()) {
    throw EmptyConicError("conic has no real points");
  }
  const ProjPoint pu{unit(p.h)};
  const double value = c.evaluate(pu);
  if (std::abs(value) <= kOnConicTol * c.max_abs_entry()) {
    return ConicRegion::OnConic;
  }
  // With the matrix scaled to signature (+,+,-) the focus side is the
  // negative one; equivalently the focus side carries the sign opposite to
  // det(C).
  const bool lobachevsky = (value < 0.0) == (c.det() < 0.0);
  return lobachevsky ? ConicRegion::Lobachevsky : ConicRegion::DeSitter;
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  require_nonzero(p.h, "join");
  require_nonzero(q.h, "join");
  return {checked_cross(p.h, q.h, "join")};
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  require_nonzero(l.h, "meet");
  require_nonzero(m.h, "meet");
  return {checked_cross(l.h, m.h, "meet")};
}

double collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return unit_det(p.h, q.h, r.h);
}

double concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return unit_det(l.h, m.h, n.h);
}

ProjLine projective_altitude(const Conic& c,
                             const std::array<ProjPoint, 3>& vertices, int i) {
  if (i < 0 || i > 2) {
    throw UsageError("projective_altitude: vertex index must be 0, 1 or 2");
  }
  const ProjPoint& vi = vertices[i];
  const ProjPoint& vj = vertices[(i + 1) % 3];
  const ProjPoint& vk = vertices[(i + 2) % 3];
  const ProjLine side = join(vj, vk);
  const ProjPoint side_pole = pole(c, side);
  if (proportional(vi.h, side_pole.h, kImproperTol)) {
    throw ImproperTriangleError(
        "projective_altitude: vertex coincides with the pole of its "
        "opposite side");
  }
  return join(vi, side_pole);
}

PappusConfig make_pappus_config(const std::array<ProjPoint, 3>& a,
                                const std::array<ProjPoint, 3>& b) {
  const ProjLine l1 = join(a[0], a[1]);
  const ProjLine l2 = join(b[0], b[1]);

  auto incident = [](const ProjLine& l, const ProjPoint& p) {
    const Vec3 lu = unit(l.h);
    const Vec3 pu = unit(p.h);
    return std::abs(lu.x * pu.x + lu.y * pu.y + lu.z * pu.z) <= 1e-12;
  };
  for (const ProjPoint& p : a) {
    if (!incident(l1, p)) {
      throw DegenerateInputError("pappus config: point off its base line");
    }
  }
  for (const ProjPoint& p : b) {
    if (!incident(l2, p)) {
      throw DegenerateInputError("pappus config: point off its base line");
    }
  }

  const std::array<ProjPoint, 6> pts = {a[0], a[1], a[2], b[0], b[1], b[2]};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (proportional(pts[i].h, pts[j].h, kDegenerateTol)) {
        throw DegenerateInputError("pappus config: coincident points");
      }
    }
  }

  const ProjPoint common = meet(l1, l2);
  for (const ProjPoint& p : pts) {
    if (proportional(p.h, common.h, kDegenerateTol)) {
      throw DegenerateInputError(
          "pappus config: point sits on the meet of the base lines");
    }
  }
  return {l1, l2, a, b};
}

PappusResult pappus_check(const PappusConfig& cfg) {
  const auto& a = cfg.a;
  const auto& b = cfg.b;
  const ProjPoint c1 = meet(join(a[1], b[2]), join(a[2], b[1]));
  const ProjPoint c2 = meet(join(a[0], b[2]), join(a[2], b[0]));
  const ProjPoint c3 = meet(join(a[0], b[1]), join(a[1], b[0]));
  return {collinear(c1, c2, c3), {c1, c2, c3}};
}

}  // namespace poisson_geom
