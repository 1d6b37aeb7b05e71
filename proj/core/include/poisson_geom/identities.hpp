#pragma once

#include <array>
#include <string>
#include <vector>

#include "poisson_geom/algebra.hpp"
#include "poisson_geom/harmonics.hpp"
#include "poisson_geom/projective.hpp"

namespace poisson_geom {

// Bracket to evaluate an identity in: either one of the eight raw signed
// vector products, or one of the four algebra laws (which carry the -1 and
// x4 factors). Every residual below is defined for all twelve.
class BracketContext {
 public:
  static BracketContext signature(Signature sig) {
    return BracketContext(sig);
  }
  static BracketContext algebra(AlgebraKind kind) {
    return BracketContext(kind);
  }

  Vec3 bracket(const Vec3& u, const Vec3& v) const {
    return is_signature_ ? cross(sig_, u, v) : bracket_law(kind_, u, v);
  }

  bool is_signature() const { return is_signature_; }
  Signature sig() const { return sig_; }
  AlgebraKind kind() const { return kind_; }

  std::string label() const {
    return is_signature_ ? "sig" + to_string(sig_)
                         : std::string(to_string(kind_));
  }

 private:
  explicit BracketContext(Signature sig) : is_signature_(true), sig_(sig) {}
  explicit BracketContext(AlgebraKind kind)
      : is_signature_(false), kind_(kind) {}

  bool is_signature_;
  Signature sig_ = EUCLIDEAN;
  AlgebraKind kind_ = AlgebraKind::Sphere;
};

// The eight signatures followed by the four algebra kinds, in a fixed order
// so reports enumerate contexts reproducibly.
std::vector<BracketContext> all_bracket_contexts();

// Cyclic sum {{X1,X2},X3} + {{X2,X3},X1} + {{X3,X1},X2}.
Vec3 jacobi_residual(const BracketContext& ctx, const Vec3& x1, const Vec3& x2,
                     const Vec3& x3);

// Index assignment for the degree-5 three-term identity: two operands keep
// their place in every term (the fixed indices) while the other three are
// cyclically permuted. The two index sets must partition {0,...,4}.
struct TomihisaInstance {
  std::array<int, 2> fixed;   // operands playing the 2nd and 4th slots
  std::array<int, 3> cyclic;  // operands playing the 1st, 3rd and 5th slots
  std::array<Vec3, 5> operands;

  // fixed = {1,3}, cyclic = {0,2,4}: the textbook labelling F1..F5.
  static TomihisaInstance standard(const std::array<Vec3, 5>& operands) {
    return {{1, 3}, {0, 2, 4}, operands};
  }
};

// {Fc0,{{Ff0,Fc1},{Ff1,Fc2}}} summed over the three rotations of the cyclic
// triple; identically zero in every three-dimensional real Lie algebra.
Vec3 tomihisa_residual(const BracketContext& ctx,
                       const TomihisaInstance& inst);

// Alternating sum over all 24 permutations s of [X_s1,[X_s2,[X_s3,[X_s4,X0]]]],
// enumerated lexicographically with the permutation parity as sign.
Vec3 razmyslov1_residual(const BracketContext& ctx, const Vec3& x0,
                         const Vec3& x1, const Vec3& x2, const Vec3& x3,
                         const Vec3& x4);

// [X0,[X0,[X0,[X1,X2]]]] - [X1,[X0,[X0,[X0,X2]]]] + [X2,[X0,[X0,[X0,X1]]]].
// Term by term this is the Jacobi identity scaled by the square norm of X0.
Vec3 razmyslov2_residual(const BracketContext& ctx, const Vec3& x0,
                         const Vec3& x1, const Vec3& x2);

// Difference between the 24-term alternating sum and the four three-term
// instances that decompose it, each instance expanded through its Jacobi
// re-association into six nested terms.
Vec3 tomihisa_decomposition_residual(const BracketContext& ctx, const Vec3& x0,
                                     const Vec3& x1, const Vec3& x2,
                                     const Vec3& x3, const Vec3& x4);

// Homogeneous reading with five points: every inner bracket is a join or a
// meet, and the three resulting lines are concurrent. Returns the
// concurrency residual.
double tomihisa_geometric(const std::array<ProjPoint, 5>& points);

// Dual reading with five lines; returns the collinearity residual of the
// three resulting points.
double tomihisa_geometric(const std::array<ProjLine, 5>& lines);

struct PappusViaTomihisa {
  double residual;           // norm of the three-line sum, scale-normalized
  double mnp_collinearity;   // |det| of (M, N, P) after unit normalization
  ProjPoint p;               // meet of BH and CE
  ProjPoint m;               // meet of BD and AE
  ProjPoint n;               // meet of AH and DC
};

// Reads the three-term identity as the Pappus theorem on the configuration
// (A,B,C) and (D,E,H): reconstructs C and H as nested brackets (checking
// they match the inputs up to scale) and returns the vanishing three-line
// combination together with the collinearity of (M,N,P).
PappusViaTomihisa pappus_via_tomihisa(const ProjPoint& a, const ProjPoint& b,
                                      const ProjPoint& c, const ProjPoint& d,
                                      const ProjPoint& e, const ProjPoint& h);

}  // namespace poisson_geom
