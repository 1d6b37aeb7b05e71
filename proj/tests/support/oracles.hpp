// Test-only oracles, kept independent of the implementation paths they
// check: a cofactor determinant, a structure-constant bracket evaluator
// with a different recursion order, and chart-coordinate tangent formulas
// for the orthogonal-intersection residual.
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "poisson_geom/algebra.hpp"
#include "poisson_geom/harmonics.hpp"
#include "poisson_geom/identities.hpp"

namespace oracles {

using poisson_geom::AlgebraKind;
using poisson_geom::BracketContext;
using poisson_geom::Signature;
using poisson_geom::TomihisaInstance;
using poisson_geom::Vec3;

// Cofactor expansion along the first row; independent of cross/dot.
inline double det3_cofactor(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
         u.z * (v.x * w.y - v.y * w.x);
}

// Structure constants of one context on the standard basis.
inline Vec3 basis_bracket(const BracketContext& ctx, int i, int j) {
  auto e = [](int k) {
    Vec3 v;
    if (k == 0) v.x = 1.0;
    if (k == 1) v.y = 1.0;
    if (k == 2) v.z = 1.0;
    return v;
  };
  return ctx.bracket(e(i), e(j));
}

inline double component(const Vec3& v, int i) {
  return i == 0 ? v.x : (i == 1 ? v.y : v.z);
}

// Bilinear expansion over the basis: sum_ij a_i b_j [e_i,e_j]. A different
// route than the componentwise product formulas of the implementation.
inline Vec3 bracket_by_basis(const BracketContext& ctx, const Vec3& a,
                             const Vec3& b) {
  Vec3 acc;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      acc = acc + (component(a, i) * component(b, j)) * basis_bracket(ctx, i, j);
    }
  }
  return acc;
}

// Naive evaluators of the residual operations: same expressions, but every
// bracket goes through the basis expansion and the terms accumulate from the
// right.
inline Vec3 naive_jacobi(const BracketContext& ctx, const Vec3& x1,
                         const Vec3& x2, const Vec3& x3) {
  auto br = [&](const Vec3& a, const Vec3& b) {
    return bracket_by_basis(ctx, a, b);
  };
  const Vec3 t3 = br(br(x3, x1), x2);
  const Vec3 t2 = br(br(x2, x3), x1);
  const Vec3 t1 = br(br(x1, x2), x3);
  return t3 + (t2 + t1);
}

inline Vec3 naive_tomihisa(const BracketContext& ctx,
                           const std::array<Vec3, 5>& f) {
  auto br = [&](const Vec3& a, const Vec3& b) {
    return bracket_by_basis(ctx, a, b);
  };
  const Vec3 t1 = br(f[0], br(br(f[1], f[2]), br(f[3], f[4])));
  const Vec3 t2 = br(f[2], br(br(f[1], f[4]), br(f[3], f[0])));
  const Vec3 t3 = br(f[4], br(br(f[1], f[0]), br(f[3], f[2])));
  return t3 + (t2 + t1);
}

inline Vec3 naive_razmyslov1(const BracketContext& ctx, const Vec3& x0,
                             const std::array<Vec3, 4>& x) {
  auto br = [&](const Vec3& a, const Vec3& b) {
    return bracket_by_basis(ctx, a, b);
  };
  // Plain recursive enumeration instead of std::next_permutation.
  Vec3 acc;
  std::array<int, 4> perm{};
  std::array<bool, 4> used{};
  std::function<void(int, int)> rec = [&](int depth, int sign) {
    if (depth == 4) {
      const Vec3 term =
          br(x[perm[0]], br(x[perm[1]], br(x[perm[2]], br(x[perm[3]], x0))));
      acc = acc + static_cast<double>(sign) * term;
      return;
    }
    for (int k = 0; k < 4; ++k) {
      if (used[k]) continue;
      // Placing value k at `depth` skips over the smaller unused values:
      // each skip is one inversion.
      int inversions = 0;
      for (int m = 0; m < k; ++m) {
        if (!used[m]) ++inversions;
      }
      used[k] = true;
      perm[depth] = k;
      rec(depth + 1, inversions % 2 == 0 ? sign : -sign);
      used[k] = false;
    }
  };
  rec(0, 1);
  return acc;
}

inline Vec3 naive_razmyslov2(const BracketContext& ctx, const Vec3& x0,
                             const Vec3& x1, const Vec3& x2) {
  auto br = [&](const Vec3& a, const Vec3& b) {
    return bracket_by_basis(ctx, a, b);
  };
  const Vec3 t1 = br(x0, br(x0, br(x0, br(x1, x2))));
  const Vec3 t2 = br(x1, br(x0, br(x0, br(x0, x2))));
  const Vec3 t3 = br(x2, br(x0, br(x0, br(x0, x1))));
  return t3 + (t1 - t2);
}

// Chart-coordinate tangent inner product for the orthogonal-intersection
// residual, written directly from the surface metrics: the tangent of
// {F=0} in chart coordinates is (-dF/du2, dF/du1) and the metric
// coefficients are (1, sin^2 t), (1, sinh^2 x) and (-1, cosh^2 x).
struct ChartTangentOracle {
  double inner;  // normalized like the implementation (cosine of the angle)
};

inline std::array<double, 2> chart_partials(AlgebraKind kind, const Vec3& f,
                                            double u1, double u2) {
  switch (kind) {
    case AlgebraKind::Sphere: {
      const double st = std::sin(u1), ct = std::cos(u1);
      const double cp = std::cos(u2), sp = std::sin(u2);
      const double d1 = f.x * ct * cp + f.y * ct * sp - f.z * st;
      const double d2 = -f.x * st * sp + f.y * st * cp;
      return {d1, d2};
    }
    case AlgebraKind::PseudoSphere: {
      const double sh = std::sinh(u1), ch = std::cosh(u1);
      const double cp = std::cos(u2), sp = std::sin(u2);
      const double d1 = f.x * ch * cp + f.y * ch * sp + f.z * sh;
      const double d2 = -f.x * sh * sp + f.y * sh * cp;
      return {d1, d2};
    }
    case AlgebraKind::DeSitter: {
      const double sh = std::sinh(u1), ch = std::cosh(u1);
      const double cp = std::cos(u2), sp = std::sin(u2);
      const double d1 = f.x * sh * cp + f.y * sh * sp + f.z * ch;
      const double d2 = -f.x * ch * sp + f.y * ch * cp;
      return {d1, d2};
    }
    default:
      throw poisson_geom::UsageError("chart_partials: surface kinds only");
  }
}

// Chart coordinates of an ambient surface point.
inline std::array<double, 2> chart_of(AlgebraKind kind, const Vec3& p) {
  switch (kind) {
    case AlgebraKind::Sphere:
      return {std::acos(p.z), std::atan2(p.y, p.x)};
    case AlgebraKind::PseudoSphere:
      return {std::acosh(p.z), std::atan2(p.y, p.x)};
    case AlgebraKind::DeSitter:
      return {std::asinh(p.z), std::atan2(p.y, p.x)};
    default:
      throw poisson_geom::UsageError("chart_of: surface kinds only");
  }
}

inline double chart_tangent_inner(AlgebraKind kind, const Vec3& f1,
                                  const Vec3& f2, const Vec3& p) {
  const auto [u1, u2] = chart_of(kind, p);
  const auto [a1, a2] = chart_partials(kind, f1, u1, u2);
  const auto [b1, b2] = chart_partials(kind, f2, u1, u2);
  // Tangents (-dF/du2, dF/du1).
  const double t1_1 = -a2, t1_2 = a1;
  const double t2_1 = -b2, t2_2 = b1;
  double g11 = 1.0, g22 = 0.0;
  switch (kind) {
    case AlgebraKind::Sphere:
      g22 = std::sin(u1) * std::sin(u1);
      break;
    case AlgebraKind::PseudoSphere:
      g22 = std::sinh(u1) * std::sinh(u1);
      break;
    case AlgebraKind::DeSitter:
      g11 = -1.0;
      g22 = std::cosh(u1) * std::cosh(u1);
      break;
    default:
      break;
  }
  const double inner = g11 * t1_1 * t2_1 + g22 * t1_2 * t2_2;
  const double n1 = std::abs(g11 * t1_1 * t1_1 + g22 * t1_2 * t1_2);
  const double n2 = std::abs(g11 * t2_1 * t2_1 + g22 * t2_2 * t2_2);
  return inner / std::sqrt(n1 * n2);
}

}  // namespace oracles
