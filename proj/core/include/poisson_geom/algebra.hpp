#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

// Coefficient triple. Serves both as a vector of the oriented 3-space and
// as the coefficients (X,Y,Z) of a first-degree harmonic.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

constexpr Vec3 operator*(double s, const Vec3& v) {
  return {s * v.x, s * v.y, s * v.z};
}

constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }

constexpr Vec3 operator/(const Vec3& v, double s) {
  return {v.x / s, v.y / s, v.z / s};
}

constexpr double euclidean_norm_sq(const Vec3& v) {
  return v.x * v.x + v.y * v.y + v.z * v.z;
}

inline double euclidean_norm(const Vec3& v) {
  return std::sqrt(euclidean_norm_sq(v));
}

inline bool all_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// One of the eight sign triples (s1,s2,s3), si = +/-1, selecting a signed
// vector product and the matching (pseudo)metric on the 3-space. The set is
// closed: instances only come from from_signs(), the named constants, or
// all_signatures(), so tests can loop over every signature exhaustively.
class Signature {
 public:
  static constexpr Signature from_signs(int s1, int s2, int s3) {
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1) ||
        (s3 != 1 && s3 != -1)) {
      throw UsageError("signature signs must be +1 or -1");
    }
    return Signature(static_cast<std::uint8_t>((s1 < 0 ? 4 : 0) |
                                               (s2 < 0 ? 2 : 0) |
                                               (s3 < 0 ? 1 : 0)));
  }

  constexpr int s1() const { return (idx_ & 4) ? -1 : 1; }
  constexpr int s2() const { return (idx_ & 2) ? -1 : 1; }
  constexpr int s3() const { return (idx_ & 1) ? -1 : 1; }

  // Stable index in [0,8), usable as a table key.
  constexpr std::uint8_t index() const { return idx_; }

  friend constexpr bool operator==(Signature a, Signature b) {
    return a.idx_ == b.idx_;
  }

  friend constexpr std::array<Signature, 8> all_signatures();

 private:
  constexpr explicit Signature(std::uint8_t idx) : idx_(idx) {}
  std::uint8_t idx_;
};

inline constexpr Signature EUCLIDEAN = Signature::from_signs(+1, +1, +1);
inline constexpr Signature HYPERBOLIC = Signature::from_signs(+1, +1, -1);

constexpr std::array<Signature, 8> all_signatures() {
  return {Signature(0), Signature(1), Signature(2), Signature(3),
          Signature(4), Signature(5), Signature(6), Signature(7)};
}

inline std::string to_string(Signature sig) {
  auto ch = [](int s) { return s > 0 ? '+' : '-'; };
  return std::string("(") + ch(sig.s1()) + "," + ch(sig.s2()) + "," +
         ch(sig.s3()) + ")";
}

// Signed vector product; bilinear and antisymmetric for every signature.
constexpr Vec3 cross(Signature sig, const Vec3& u, const Vec3& v) {
  return {sig.s1() * (u.y * v.z - u.z * v.y),
          sig.s2() * (u.z * v.x - u.x * v.z),
          sig.s3() * (u.x * v.y - u.y * v.x)};
}

// Scalar product of the signature's (pseudo)metric.
constexpr double dot(Signature sig, const Vec3& u, const Vec3& v) {
  return sig.s1() * u.x * v.x + sig.s2() * u.y * v.y + sig.s3() * u.z * v.z;
}

// Oriented volume spanned by (u,v,w). Because each sign enters twice it is
// signature-independent and equals det(u,v,w).
constexpr double triple(Signature sig, const Vec3& u, const Vec3& v,
                        const Vec3& w) {
  return dot(sig, cross(sig, u, v), w);
}

// Trace-zero 2x2 real matrix. Only three entries are stored; m22 is
// synthesized as -m11, so the trace cannot drift from zero.
struct TracelessMatrix2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m21 = 0.0;

  constexpr double m22() const { return -m11; }

  friend constexpr bool operator==(const TracelessMatrix2&,
                                   const TracelessMatrix2&) = default;
};

constexpr TracelessMatrix2 operator+(const TracelessMatrix2& a,
                                     const TracelessMatrix2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21};
}

constexpr TracelessMatrix2 operator-(const TracelessMatrix2& a,
                                     const TracelessMatrix2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21};
}

constexpr TracelessMatrix2 operator*(double s, const TracelessMatrix2& m) {
  return {s * m.m11, s * m.m12, s * m.m21};
}

// Commutator ab - ba. The product of traceless matrices is not traceless,
// but the commutator always is; it is assembled entrywise here.
constexpr TracelessMatrix2 commutator(const TracelessMatrix2& a,
                                      const TracelessMatrix2& b) {
  // (ab)11 = a11 b11 + a12 b21, (ba)11 = b11 a11 + b12 a21
  const double c11 = a.m12 * b.m21 - b.m12 * a.m21;
  const double c12 = a.m11 * b.m12 + a.m12 * b.m22() -
                     (b.m11 * a.m12 + b.m12 * a.m22());
  const double c21 = a.m21 * b.m11 + a.m22() * b.m21 -
                     (b.m21 * a.m11 + b.m22() * a.m21);
  return {c11, c12, c21};
}

inline double frobenius_norm(const TracelessMatrix2& m) {
  return std::sqrt(m.m11 * m.m11 + m.m12 * m.m12 + m.m21 * m.m21 +
                   m.m22() * m.m22());
}

// Linear realization of the triple (X,Y,Z) as a traceless 2x2 matrix.
constexpr TracelessMatrix2 to_sl2(const Vec3& v) {
  return {0.5 * v.y, -0.5 * (v.x + v.z), 0.5 * (v.z - v.x)};
}

constexpr Vec3 from_sl2(const TracelessMatrix2& m) {
  return {-(m.m12 + m.m21), 2.0 * m.m11, m.m21 - m.m12};
}

// Linear functional on Vec3, applied by componentwise product and sum.
struct Covector3 {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  constexpr double operator()(const Vec3& v) const {
    return c1 * v.x + c2 * v.y + c3 * v.z;
  }

  friend constexpr bool operator==(const Covector3&,
                                   const Covector3&) = default;
};

// The functional z -> det(u,v,z). Bilinear and skew-symmetric in (u,v).
constexpr Covector3 pair_functional(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

}  // namespace poisson_geom
