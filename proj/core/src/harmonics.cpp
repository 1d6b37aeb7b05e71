#include "poisson_geom/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

namespace {

constexpr double kSingularityTol = 1e-9;

// Basis values together with their partials along the two chart directions.
struct BasisJet {
  Vec3 f;    // (f1, f2, f3)
  Vec3 d1;   // d/du1
  Vec3 d2;   // d/du2
};

BasisJet basis_jet(AlgebraKind kind, SurfaceCoord s) {
  switch (kind) {
    case AlgebraKind::Sphere: {
      const double st = std::sin(s.u1), ct = std::cos(s.u1);
      const double cp = std::cos(s.u2), sp = std::sin(s.u2);
      return {{st * cp, st * sp, ct},
              {ct * cp, ct * sp, -st},
              {-st * sp, st * cp, 0.0}};
    }
    case AlgebraKind::PseudoSphere: {
      const double sh = std::sinh(s.u1), ch = std::cosh(s.u1);
      const double cp = std::cos(s.u2), sp = std::sin(s.u2);
      return {{sh * cp, sh * sp, ch},
              {ch * cp, ch * sp, sh},
              {-sh * sp, sh * cp, 0.0}};
    }
    case AlgebraKind::DeSitter: {
      const double sh = std::sinh(s.u1), ch = std::cosh(s.u1);
      const double cp = std::cos(s.u2), sp = std::sin(s.u2);
      return {{ch * cp, ch * sp, sh},
              {sh * cp, sh * sp, ch},
              {-ch * sp, ch * cp, 0.0}};
    }
    case AlgebraKind::Quadratic: {
      const double p = s.u1, q = s.u2;
      return {{2.0 * p * q, p * p - q * q, p * p + q * q},
              {2.0 * q, 2.0 * p, 2.0 * p},
              {2.0 * p, -2.0 * q, 2.0 * q}};
    }
  }
  throw UsageError("unknown algebra kind");
}

void check_sphere_domain(SurfaceCoord s) {
  if (!(s.u1 > 0.0 && s.u1 < std::numbers::pi)) {
    throw DomainError("sphere chart requires theta strictly inside (0,pi)");
  }
}

struct QuadratureRule {
  std::vector<double> z_nodes;
  std::vector<double> z_weights;
  std::vector<double> phi_nodes;
  double phi_weight;
};

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (t * p0 - p1) / (t * t - 1.0);
      const double step = p0 / pp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

// 32 Gauss-Legendre nodes in z = cos(theta) and 64 uniform nodes in phi.
// Exact for every product of first-degree harmonics: the phi sum annihilates
// all frequency-1 and -2 terms and what survives is a degree-2 polynomial
// in z.
const QuadratureRule& sphere_quadrature() {
  static const QuadratureRule rule = [] {
    QuadratureRule r;
    gauss_legendre(32, r.z_nodes, r.z_weights);
    const int n_phi = 64;
    r.phi_nodes.resize(n_phi);
    for (int j = 0; j < n_phi; ++j) {
      r.phi_nodes[j] = 2.0 * std::numbers::pi * j / n_phi;
    }
    r.phi_weight = 2.0 * std::numbers::pi / n_phi;
    return r;
  }();
  return rule;
}

}  // namespace

const char* to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Sphere:
      return "sphere";
    case AlgebraKind::PseudoSphere:
      return "pseudosphere";
    case AlgebraKind::DeSitter:
      return "desitter";
    case AlgebraKind::Quadratic:
      return "quadratic";
  }
  return "?";
}

Vec3 bracket_law(AlgebraKind kind, const Vec3& u, const Vec3& v) {
  switch (kind) {
    case AlgebraKind::Sphere:
      return cross(EUCLIDEAN, u, v);
    case AlgebraKind::PseudoSphere:
      return cross(HYPERBOLIC, u, v);
    case AlgebraKind::DeSitter:
      return -cross(HYPERBOLIC, u, v);
    case AlgebraKind::Quadratic:
      return 4.0 * cross(HYPERBOLIC, u, v);
  }
  throw UsageError("unknown algebra kind");
}

Vec3 basis_values(AlgebraKind kind, SurfaceCoord s) {
  if (kind == AlgebraKind::Sphere) check_sphere_domain(s);
  return basis_jet(kind, s).f;
}

double eval(const Harmonic& f, SurfaceCoord s) {
  const Vec3 b = basis_values(f.kind, s);
  return f.coeffs.x * b.x + f.coeffs.y * b.y + f.coeffs.z * b.z;
}

Harmonic poisson_algebraic(const Harmonic& f, const Harmonic& g) {
  if (f.kind != g.kind) {
    throw UsageError("poisson bracket requires harmonics of equal kind");
  }
  return {f.kind, bracket_law(f.kind, f.coeffs, g.coeffs)};
}

double poisson_numeric(const Harmonic& f, const Harmonic& g, SurfaceCoord s) {
  if (f.kind != g.kind) {
    throw UsageError("poisson bracket requires harmonics of equal kind");
  }
  const BasisJet jet = basis_jet(f.kind, s);
  auto along = [](const Vec3& coeffs, const Vec3& basis) {
    return coeffs.x * basis.x + coeffs.y * basis.y + coeffs.z * basis.z;
  };
  const double f1 = along(f.coeffs, jet.d1), f2 = along(f.coeffs, jet.d2);
  const double g1 = along(g.coeffs, jet.d1), g2 = along(g.coeffs, jet.d2);

  switch (f.kind) {
    case AlgebraKind::Sphere: {
      check_sphere_domain(s);
      const double st = std::sin(s.u1);
      if (std::abs(st) <= kSingularityTol) {
        throw DomainError("sphere bracket undefined at the poles");
      }
      return (f1 * g2 - f2 * g1) / st;
    }
    case AlgebraKind::PseudoSphere: {
      const double sh = std::sinh(s.u1);
      if (std::abs(sh) <= kSingularityTol) {
        throw DomainError("pseudo-sphere bracket undefined at the apex");
      }
      // Orientation fixed by the basis table {f1,f2} = -f3.
      return (f2 * g1 - f1 * g2) / sh;
    }
    case AlgebraKind::DeSitter:
      return (f1 * g2 - f2 * g1) / std::cosh(s.u1);
    case AlgebraKind::Quadratic:
      return f1 * g2 - f2 * g1;
  }
  throw UsageError("unknown algebra kind");
}

double l2_inner(const Harmonic& f, const Harmonic& g) {
  if (f.kind != AlgebraKind::Sphere || g.kind != AlgebraKind::Sphere) {
    throw UsageError("l2_inner is defined on the sphere algebra only");
  }
  const QuadratureRule& rule = sphere_quadrature();
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.z_nodes.size(); ++i) {
    const double theta = std::acos(rule.z_nodes[i]);
    double phi_acc = 0.0;
    for (const double phi : rule.phi_nodes) {
      const Vec3 b = basis_jet(AlgebraKind::Sphere, {theta, phi}).f;
      const double fv = f.coeffs.x * b.x + f.coeffs.y * b.y + f.coeffs.z * b.z;
      const double gv = g.coeffs.x * b.x + g.coeffs.y * b.y + g.coeffs.z * b.z;
      phi_acc += fv * gv;
    }
    acc += rule.z_weights[i] * rule.phi_weight * phi_acc;
  }
  return 3.0 / (4.0 * std::numbers::pi) * acc;
}

}  // namespace poisson_geom
