#include "poisson_geom/identities.hpp"

#include <algorithm>
#include <cmath>

#include "poisson_geom/errors.hpp"

namespace poisson_geom {

namespace {

int permutation_parity(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void validate_instance(const TomihisaInstance& inst) {
  std::array<bool, 5> seen{};
  for (const int i : inst.fixed) {
    if (i < 0 || i > 4 || seen[i]) {
      throw UsageError("tomihisa instance: indices must partition {0..4}");
    }
    seen[i] = true;
  }
  for (const int i : inst.cyclic) {
    if (i < 0 || i > 4 || seen[i]) {
      throw UsageError("tomihisa instance: indices must partition {0..4}");
    }
    seen[i] = true;
  }
}

// The six-term expansion of one three-term instance, obtained by applying
// the Jacobi identity inside each term:
//   T(x0, w; a, b, c) =
//     [a,[b,[w,[c,x0]]]] - [a,[w,[b,[c,x0]]]]
//   + [b,[c,[w,[a,x0]]]] - [b,[w,[c,[a,x0]]]]
//   + [c,[a,[w,[b,x0]]]] - [c,[w,[a,[b,x0]]]].
Vec3 tomihisa_reassociated(const BracketContext& ctx, const Vec3& x0,
                           const Vec3& w, const Vec3& a, const Vec3& b,
                           const Vec3& c) {
  auto br = [&](const Vec3& u, const Vec3& v) { return ctx.bracket(u, v); };
  Vec3 acc = br(a, br(b, br(w, br(c, x0))));
  acc = acc - br(a, br(w, br(b, br(c, x0))));
  acc = acc + br(b, br(c, br(w, br(a, x0))));
  acc = acc - br(b, br(w, br(c, br(a, x0))));
  acc = acc + br(c, br(a, br(w, br(b, x0))));
  acc = acc - br(c, br(w, br(a, br(b, x0))));
  return acc;
}

}  // namespace

std::vector<BracketContext> all_bracket_contexts() {
  std::vector<BracketContext> out;
  out.reserve(12);
  for (const Signature sig : all_signatures()) {
    out.push_back(BracketContext::signature(sig));
  }
  for (const AlgebraKind kind : all_algebra_kinds()) {
    out.push_back(BracketContext::algebra(kind));
  }
  return out;
}

Vec3 jacobi_residual(const BracketContext& ctx, const Vec3& x1, const Vec3& x2,
                     const Vec3& x3) {
  auto br = [&](const Vec3& u, const Vec3& v) { return ctx.bracket(u, v); };
  return br(br(x1, x2), x3) + br(br(x2, x3), x1) + br(br(x3, x1), x2);
}

Vec3 tomihisa_residual(const BracketContext& ctx,
                       const TomihisaInstance& inst) {
  validate_instance(inst);
  auto br = [&](const Vec3& u, const Vec3& v) { return ctx.bracket(u, v); };
  const Vec3& f2 = inst.operands[inst.fixed[0]];
  const Vec3& f4 = inst.operands[inst.fixed[1]];
  Vec3 acc{};
  for (int k = 0; k < 3; ++k) {
    const Vec3& outer = inst.operands[inst.cyclic[k]];
    const Vec3& c1 = inst.operands[inst.cyclic[(k + 1) % 3]];
    const Vec3& c2 = inst.operands[inst.cyclic[(k + 2) % 3]];
    acc = acc + br(outer, br(br(f2, c1), br(f4, c2)));
  }
  return acc;
}

Vec3 razmyslov1_residual(const BracketContext& ctx, const Vec3& x0,
                         const Vec3& x1, const Vec3& x2, const Vec3& x3,
                         const Vec3& x4) {
  auto br = [&](const Vec3& u, const Vec3& v) { return ctx.bracket(u, v); };
  const std::array<Vec3, 4> x = {x1, x2, x3, x4};
  std::array<int, 4> perm = {0, 1, 2, 3};
  Vec3 acc{};
  do {
    const Vec3 term =
        br(x[perm[0]], br(x[perm[1]], br(x[perm[2]], br(x[perm[3]], x0))));
    acc = acc + permutation_parity(perm) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Vec3 razmyslov2_residual(const BracketContext& ctx, const Vec3& x0,
                         const Vec3& x1, const Vec3& x2) {
  auto br = [&](const Vec3& u, const Vec3& v) { return ctx.bracket(u, v); };
  const Vec3 t1 = br(x0, br(x0, br(x0, br(x1, x2))));
  const Vec3 t2 = br(x1, br(x0, br(x0, br(x0, x2))));
  const Vec3 t3 = br(x2, br(x0, br(x0, br(x0, x1))));
  return t1 - t2 + t3;
}

Vec3 tomihisa_decomposition_residual(const BracketContext& ctx, const Vec3& x0,
                                     const Vec3& x1, const Vec3& x2,
                                     const Vec3& x3, const Vec3& x4) {
  const Vec3 lhs = razmyslov1_residual(ctx, x0, x1, x2, x3, x4);
  Vec3 rhs = tomihisa_reassociated(ctx, x0, x1, x2, x3, x4);
  rhs = rhs + tomihisa_reassociated(ctx, x0, x2, x3, x1, x4);
  rhs = rhs + tomihisa_reassociated(ctx, x0, x3, x1, x2, x4);
  rhs = rhs + tomihisa_reassociated(ctx, x0, x4, x2, x1, x3);
  return lhs - rhs;
}

double tomihisa_geometric(const std::array<ProjPoint, 5>& points) {
  // Labels (F1..F5) = (p0..p4), fixed pair (F2,F4) = (p1,p3).
  const ProjPoint& f2 = points[1];
  const ProjPoint& f4 = points[3];
  std::array<ProjLine, 3> lines;
  const std::array<int, 3> cyc = {0, 2, 4};
  for (int k = 0; k < 3; ++k) {
    const ProjPoint& outer = points[cyc[k]];
    const ProjPoint& c1 = points[cyc[(k + 1) % 3]];
    const ProjPoint& c2 = points[cyc[(k + 2) % 3]];
    const ProjPoint inner = meet(join(f2, c1), join(f4, c2));
    lines[k] = join(outer, inner);
  }
  return concurrent(lines[0], lines[1], lines[2]);
}

double tomihisa_geometric(const std::array<ProjLine, 5>& lines) {
  const ProjLine& f2 = lines[1];
  const ProjLine& f4 = lines[3];
  std::array<ProjPoint, 3> pts;
  const std::array<int, 3> cyc = {0, 2, 4};
  for (int k = 0; k < 3; ++k) {
    const ProjLine& outer = lines[cyc[k]];
    const ProjLine& c1 = lines[cyc[(k + 1) % 3]];
    const ProjLine& c2 = lines[cyc[(k + 2) % 3]];
    const ProjLine inner = join(meet(f2, c1), meet(f4, c2));
    pts[k] = meet(outer, inner);
  }
  return collinear(pts[0], pts[1], pts[2]);
}

PappusViaTomihisa pappus_via_tomihisa(const ProjPoint& a, const ProjPoint& b,
                                      const ProjPoint& c, const ProjPoint& d,
                                      const ProjPoint& e, const ProjPoint& h) {
  // Roles: F1=A, F2=B, F3=P, F4=E, F5=D, with P = BH ^ CE.
  const ProjPoint p = meet(join(b, h), join(c, e));

  auto br = [](const Vec3& u, const Vec3& v) { return cross(EUCLIDEAN, u, v); };

  // Nested-bracket reconstructions of C, H and the cross point M.
  const Vec3 c_rec = br(br(a.h, b.h), br(p.h, e.h));
  const Vec3 h_rec = br(br(p.h, b.h), br(d.h, e.h));
  const Vec3 m_vec = br(br(d.h, b.h), br(a.h, e.h));
  if (euclidean_norm(c_rec) == 0.0 || euclidean_norm(h_rec) == 0.0 ||
      euclidean_norm(m_vec) == 0.0) {
    throw DegenerateInputError("pappus_via_tomihisa: collapsed construction");
  }

  auto matches = [](const Vec3& u, const Vec3& v) {
    const Vec3 cu = u / euclidean_norm(u);
    const Vec3 cv = v / euclidean_norm(v);
    return euclidean_norm(cross(EUCLIDEAN, cu, cv)) <= 1e-9;
  };
  if (!matches(c_rec, c.h) || !matches(h_rec, h.h)) {
    throw DegenerateInputError(
        "pappus_via_tomihisa: inputs are not a pappus configuration");
  }

  // {F1,H} + {F3,M} + {F5,C} with the representatives the brackets produce.
  const Vec3 t1 = br(a.h, h_rec);
  const Vec3 t2 = br(p.h, m_vec);
  const Vec3 t3 = br(d.h, c_rec);
  const double scale = std::max(
      {euclidean_norm(t1), euclidean_norm(t2), euclidean_norm(t3), 1e-300});
  const double residual = euclidean_norm(t1 + t2 + t3) / scale;

  const ProjPoint m{m_vec};
  const ProjPoint n = meet(join(a, h), join(d, c));
  const double mnp = collinear(m, n, p);
  return {residual, mnp, p, m, n};
}

}  // namespace poisson_geom
