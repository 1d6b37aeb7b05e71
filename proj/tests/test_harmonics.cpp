#include <doctest.h>

#include <cmath>

#include "poisson_geom/errors.hpp"
#include "poisson_geom/harmonics.hpp"
#include "poisson_geom/rng.hpp"
#include "support/test_util.hpp"

using namespace poisson_geom;
using test_util::vec_distance;

namespace {

SurfaceCoord random_chart_point(SplitMix64& rng, AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Sphere:
      return {rng.uniform(0.3, std::acos(-1.0) - 0.3), rng.uniform(0.0, 6.28)};
    case AlgebraKind::PseudoSphere: {
      const double mag = rng.uniform(0.3, 1.2);
      return {rng.uniform01() < 0.5 ? mag : -mag, rng.uniform(0.0, 6.28)};
    }
    case AlgebraKind::DeSitter:
      return {rng.uniform(-1.2, 1.2), rng.uniform(0.0, 6.28)};
    case AlgebraKind::Quadratic:
      return {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
  }
  return {};
}

// Basis bracket tables of the four algebras: the value of {f_i, f_j} as a
// coefficient triple, frozen from hand-computed chart derivatives.
Vec3 expected_basis_bracket(AlgebraKind kind, int i, int j) {
  auto e = [](int k, double s) {
    Vec3 v;
    (k == 0 ? v.x : k == 1 ? v.y : v.z) = s;
    return v;
  };
  if (i == j) return {};
  // (i,j) cyclic: (0,1)->table[0], (1,2)->table[1], (2,0)->table[2]
  struct Entry {
    int target;
    double scale;
  };
  static constexpr Entry tables[4][3] = {
      {{2, 1.0}, {0, 1.0}, {1, 1.0}},     // sphere
      {{2, -1.0}, {0, 1.0}, {1, 1.0}},    // pseudosphere
      {{2, 1.0}, {0, -1.0}, {1, -1.0}},   // desitter
      {{2, -4.0}, {0, 4.0}, {1, 4.0}},    // quadratic
  };
  const int kind_idx = static_cast<int>(kind);
  if ((i + 1) % 3 == j) {
    const Entry entry = tables[kind_idx][i];
    return e(entry.target, entry.scale);
  }
  const Entry entry = tables[kind_idx][j];
  return e(entry.target, -entry.scale);
}

}  // namespace

TEST_CASE("basis evaluation on each surface") {
  // f3 at the sphere's north limit
  const Harmonic f3{AlgebraKind::Sphere, {0, 0, 1}};
  CHECK(eval(f3, {1e-9, 0.4}) == doctest::Approx(1.0).epsilon(1e-12));

  const Harmonic h3{AlgebraKind::PseudoSphere, {0, 0, 1}};
  CHECK(eval(h3, {0.0, 0.0}) == 1.0);

  const Harmonic q1{AlgebraKind::Quadratic, {1, 0, 0}};
  CHECK(eval(q1, {1.0, 1.0}) == 2.0);

  CHECK_THROWS_AS(eval(f3, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(eval(f3, {3.5, 0.0}), DomainError);
}

TEST_CASE("algebraic bracket reproduces the proof tables") {
  auto e = [](int k) {
    Vec3 v;
    (k == 0 ? v.x : k == 1 ? v.y : v.z) = 1.0;
    return v;
  };
  for (const AlgebraKind kind : all_algebra_kinds()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Harmonic fi{kind, e(i)}, fj{kind, e(j)};
        const Harmonic br = poisson_algebraic(fi, fj);
        CHECK(br.kind == kind);
        CHECK(vec_distance(br.coeffs, expected_basis_bracket(kind, i, j)) <
              1e-14);
      }
    }
  }
  CHECK_THROWS_AS(poisson_algebraic({AlgebraKind::Sphere, {1, 0, 0}},
                                    {AlgebraKind::Quadratic, {1, 0, 0}}),
                  UsageError);
}

TEST_CASE("numeric bracket agrees with the algebraic law") {
  // {f1,f2} on the sphere at the equator equals f3 there, which vanishes.
  const Harmonic f1{AlgebraKind::Sphere, {1, 0, 0}};
  const Harmonic f2{AlgebraKind::Sphere, {0, 1, 0}};
  const double half_pi = std::acos(0.0);
  CHECK(std::abs(poisson_numeric(f1, f2, {half_pi, 0.0})) < 1e-14);

  // {p^2, q^2} = 4pq on the symplectic plane.
  const Harmonic p2{AlgebraKind::Quadratic, quadratic_convert({1, 0, 0})};
  const Harmonic q2{AlgebraKind::Quadratic, quadratic_convert({0, 0, 1})};
  CHECK(poisson_numeric(p2, q2, {1.0, 1.0}) ==
        doctest::Approx(4.0).epsilon(1e-14));

  SplitMix64 rng(31);
  for (const AlgebraKind kind : all_algebra_kinds()) {
    for (int t = 0; t < 200; ++t) {
      const Harmonic f{kind, rng.vec_in_cube()};
      const Harmonic g{kind, rng.vec_in_cube()};
      const Harmonic law = poisson_algebraic(f, g);
      for (int s = 0; s < 10; ++s) {
        const SurfaceCoord coord = random_chart_point(rng, kind);
        CHECK(std::abs(poisson_numeric(f, g, coord) - eval(law, coord)) <
              1e-10);
      }
    }
  }
}

TEST_CASE("numeric bracket rejects chart singularities") {
  const Harmonic f{AlgebraKind::Sphere, {1, 2, 3}};
  const Harmonic g{AlgebraKind::Sphere, {-1, 0, 1}};
  CHECK_THROWS_AS(poisson_numeric(f, g, {1e-12, 0.3}), DomainError);
  const Harmonic hf{AlgebraKind::PseudoSphere, {1, 2, 3}};
  const Harmonic hg{AlgebraKind::PseudoSphere, {-1, 0, 1}};
  CHECK_THROWS_AS(poisson_numeric(hf, hg, {0.0, 0.3}), DomainError);
  // No singularity on the one-sheeted hyperboloid chart.
  const Harmonic df{AlgebraKind::DeSitter, {1, 2, 3}};
  const Harmonic dg{AlgebraKind::DeSitter, {-1, 0, 1}};
  CHECK_NOTHROW(poisson_numeric(df, dg, {0.0, 0.3}));
}

TEST_CASE("l2 product reproduces the euclidean scalar product") {
  auto basis = [](int k) {
    Vec3 v;
    (k == 0 ? v.x : k == 1 ? v.y : v.z) = 1.0;
    return Harmonic{AlgebraKind::Sphere, v};
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      CHECK(std::abs(l2_inner(basis(i), basis(j)) - expected) < 1e-12);
    }
  }

  const Harmonic f{AlgebraKind::Sphere, {1, 2, 3}};
  CHECK(l2_inner(f, f) == doctest::Approx(14.0).epsilon(1e-12));

  SplitMix64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const Harmonic a{AlgebraKind::Sphere, rng.vec_in_cube()};
    const Harmonic b{AlgebraKind::Sphere, rng.vec_in_cube()};
    CHECK(std::abs(l2_inner(a, b) - dot(EUCLIDEAN, a.coeffs, b.coeffs)) <
          1e-10);
    CHECK(std::abs(l2_inner(a, b) - l2_inner(b, a)) < 1e-14);

    // Bilinearity.
    const double s = rng.uniform(-2.0, 2.0), u = rng.uniform(-2.0, 2.0);
    const Harmonic combo{AlgebraKind::Sphere,
                         s * a.coeffs + u * rng.vec_in_cube()};
    const Harmonic third{AlgebraKind::Sphere, combo.coeffs - s * a.coeffs};
    CHECK(std::abs(l2_inner(combo, b) -
                   (s * l2_inner(a, b) + l2_inner(third, b))) < 1e-10);
  }

  CHECK_THROWS_AS(l2_inner({AlgebraKind::Quadratic, {1, 0, 0}},
                           {AlgebraKind::Quadratic, {1, 0, 0}}),
                  UsageError);
}

TEST_CASE("quadratic form coordinate change") {
  CHECK(quadratic_convert({1, 0, 1}) == Vec3{0, 0, 1});
  CHECK(quadratic_convert({1, 0, 0}) == Vec3{0, 0.5, 0.5});
  const QuadraticForm q{2, -3, 5};
  CHECK(quadratic_coefficients(quadratic_convert(q)) == q);

  SplitMix64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Vec3 v = rng.vec_in_cube();
    CHECK(vec_distance(quadratic_convert(quadratic_coefficients(v)), v) == 0.0);
  }
}

TEST_CASE("discriminant scalar product") {
  const QuadraticForm circle{1, 0, 1};
  CHECK(discriminant_scalar(circle, circle) == -1.0);
  const QuadraticForm p2{1, 0, 0};
  CHECK(discriminant_scalar(p2, p2) == 0.0);
  const QuadraticForm q2{0, 0, 1};
  CHECK(discriminant_scalar(p2, q2) == -0.5);

  SplitMix64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const Vec3 a = rng.vec_in_cube(), b = rng.vec_in_cube();
    const QuadraticForm qa{a.x, a.y, a.z}, qb{b.x, b.y, b.z};
    const double lhs = discriminant_scalar(qa, qb);
    const double rhs =
        dot(HYPERBOLIC, quadratic_convert(qa), quadratic_convert(qb));
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("basis sums characterize each surface") {
  SplitMix64 rng(47);
  for (const AlgebraKind kind : all_algebra_kinds()) {
    for (int t = 0; t < 100; ++t) {
      const SurfaceCoord s = random_chart_point(rng, kind);
      const Vec3 b = basis_values(kind, s);
      const double sum_e = b.x * b.x + b.y * b.y + b.z * b.z;
      const double sum_h = b.x * b.x + b.y * b.y - b.z * b.z;
      switch (kind) {
        case AlgebraKind::Sphere:
          CHECK(std::abs(sum_e - 1.0) < 1e-12);
          break;
        case AlgebraKind::PseudoSphere:
          CHECK(std::abs(sum_h + 1.0) < 1e-12);
          break;
        case AlgebraKind::DeSitter:
          CHECK(std::abs(sum_h - 1.0) < 1e-12);
          break;
        case AlgebraKind::Quadratic:
          CHECK(std::abs(sum_h) < 1e-12);
          CHECK(b.z >= 0.0);
          break;
      }
    }
  }
}
