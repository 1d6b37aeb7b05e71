#include "poisson_geom/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "poisson_geom/errors.hpp"
#include "poisson_geom/projective.hpp"
#include "poisson_geom/rng.hpp"
#include "poisson_geom/surface.hpp"
#include "poisson_geom/version.hpp"

namespace poisson_geom {

namespace {

// Stable stream keys, so a narrowed --contexts run reproduces the residuals
// of the full run context by context.
enum CheckId : std::uint64_t {
  kJacobi = 1,
  kTomihisa = 2,
  kRazmyslov1 = 3,
  kRazmyslov2 = 4,
  kDecomposition = 5,
  kEhDuality = 6,
  kTomihisaPoints = 7,
  kTomihisaLines = 8,
  kPappus = 9,
  kOrthocenterSphere = 10,
  kOrthocenterPseudoSphere = 11,
  kOrthocenterDeSitter = 12,
};

std::uint64_t context_id(const BracketContext& ctx) {
  return ctx.is_signature() ? ctx.sig().index()
                            : 8 + static_cast<std::uint64_t>(ctx.kind());
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t check,
                          std::uint64_t ctx) {
  return SplitMix64::mix(seed ^ SplitMix64::mix((check << 32) | ctx));
}

Vec3 nonzero_cube(SplitMix64& rng) {
  for (;;) {
    const Vec3 v = rng.vec_in_cube();
    if (euclidean_norm(v) > 0.1) return v;
  }
}

Vec3 surface_sample(SplitMix64& rng, AlgebraKind kind) {
  for (;;) {
    const Vec3 v = rng.vec_in_cube();
    const double ee = euclidean_norm_sq(v);
    if (ee < 0.01) continue;
    if (kind == AlgebraKind::Sphere) return v;
    const double q = dot(HYPERBOLIC, v, v);
    if (kind == AlgebraKind::PseudoSphere && q < -0.1 * ee) return v;
    if (kind == AlgebraKind::DeSitter && q > 0.1 * ee) return v;
  }
}

// Proper triangle with a properness margin, so downstream meets stay
// well-conditioned.
Triangle proper_triangle(SplitMix64& rng, AlgebraKind kind) {
  const Signature sig = metric_signature(kind);
  for (;;) {
    const Vec3 v1 = surface_point(kind, surface_sample(rng, kind)).rep;
    const Vec3 v2 = surface_point(kind, surface_sample(rng, kind)).rep;
    const Vec3 v3 = surface_point(kind, surface_sample(rng, kind)).rep;
    const std::array<Vec3, 3> v = {v1, v2, v3};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const Vec3 nested =
          cross(sig, cross(sig, v[(i + 1) % 3], v[(i + 2) % 3]), v[i]);
      if (euclidean_norm(nested) < 1e-2) ok = false;
    }
    if (!ok) continue;
    try {
      return make_triangle(kind, v1, v2, v3);
    } catch (const Error&) {
      continue;
    }
  }
}

double orthocenter_trial(SplitMix64& rng, AlgebraKind kind) {
  for (;;) {
    try {
      const Triangle t = proper_triangle(rng, kind);
      const Geodesic a0 = altitude(t, 0);
      const Geodesic a1 = altitude(t, 1);
      const Geodesic a2 = altitude(t, 2);
      const SurfacePoint h01 = meet(a0, a1);
      const SurfacePoint h12 = meet(a1, a2);
      const SurfacePoint h02 = meet(a0, a2);

      const Signature sig = metric_signature(kind);
      const Vec3 d1 = cross(sig, t.vertices[1], t.vertices[2]);
      const Vec3 d2 = cross(sig, t.vertices[2], t.vertices[0]);
      const Vec3 d3 = cross(sig, t.vertices[0], t.vertices[1]);
      const SurfacePoint hd = orthocenter(make_triangle(kind, d1, d2, d3));

      return std::max({point_distance(h01, h12), point_distance(h01, h02),
                       point_distance(h12, h02), point_distance(h01, hd)});
    } catch (const Error&) {
      continue;  // cone meet or borderline properness: redraw
    }
  }
}

double eh_trial(SplitMix64& rng, std::uint64_t parity) {
  const Vec3 v = nonzero_cube(rng);
  Vec3 e_side, h_side;
  if (parity % 2 == 0) {
    e_side = line_of(v, DualityModel::Euclidean).h;
    h_side = eh_reflect(line_of(v, DualityModel::Hyperbolic)).h;
  } else {
    e_side = dual_point(ProjLine{v}, DualityModel::Euclidean).h;
    h_side = eh_reflect(dual_point(ProjLine{v}, DualityModel::Hyperbolic)).h;
  }
  const Vec3 u1 = e_side / euclidean_norm(e_side);
  const Vec3 u2 = h_side / euclidean_norm(h_side);
  return std::min(euclidean_norm(u1 - u2), euclidean_norm(u1 + u2));
}

double tomihisa_points_trial(SplitMix64& rng) {
  for (;;) {
    std::array<ProjPoint, 5> pts;
    for (auto& p : pts) p = ProjPoint{nonzero_cube(rng)};
    try {
      return tomihisa_geometric(pts);
    } catch (const Error&) {
      continue;
    }
  }
}

double tomihisa_lines_trial(SplitMix64& rng) {
  for (;;) {
    std::array<ProjLine, 5> lines;
    for (auto& l : lines) l = ProjLine{nonzero_cube(rng)};
    try {
      return tomihisa_geometric(lines);
    } catch (const Error&) {
      continue;
    }
  }
}

std::array<ProjPoint, 3> points_on_random_line(SplitMix64& rng) {
  for (;;) {
    const double px = rng.uniform(-2.0, 2.0), py = rng.uniform(-2.0, 2.0);
    const double dx = rng.uniform(-1.0, 1.0), dy = rng.uniform(-1.0, 1.0);
    if (std::hypot(dx, dy) < 0.2) continue;
    double t0 = rng.uniform(-2.0, 2.0), t1 = rng.uniform(-2.0, 2.0),
           t2 = rng.uniform(-2.0, 2.0);
    if (std::abs(t0 - t1) < 0.2 || std::abs(t0 - t2) < 0.2 ||
        std::abs(t1 - t2) < 0.2) {
      continue;
    }
    auto at = [&](double t) {
      return ProjPoint{{px + t * dx, py + t * dy, 1.0}};
    };
    return {at(t0), at(t1), at(t2)};
  }
}

double pappus_trial(SplitMix64& rng) {
  for (;;) {
    const std::array<ProjPoint, 3> a = points_on_random_line(rng);
    const std::array<ProjPoint, 3> b = points_on_random_line(rng);
    try {
      const PappusConfig cfg = make_pappus_config(a, b);
      const PappusResult direct = pappus_check(cfg);
      const PappusViaTomihisa via =
          pappus_via_tomihisa(a[0], a[1], a[2], b[0], b[1], b[2]);
      return std::max({direct.residual, via.residual, via.mnp_collinearity});
    } catch (const Error&) {
      continue;
    }
  }
}

CheckResult run_check(const std::string& name, double tolerance,
                      std::uint64_t trials, std::uint64_t seed,
                      std::uint64_t check, std::uint64_t ctx,
                      double (*trial)(SplitMix64&, const BracketContext&),
                      const BracketContext& bracket_ctx) {
  const std::uint64_t stream = stream_seed(seed, check, ctx);
  double max_residual = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::for_trial(stream, t);
    max_residual = std::max(max_residual, trial(rng, bracket_ctx));
  }
  return {name, max_residual, tolerance, max_residual < tolerance};
}

double jacobi_trial(SplitMix64& rng, const BracketContext& ctx) {
  return euclidean_norm(jacobi_residual(ctx, rng.vec_in_cube(),
                                        rng.vec_in_cube(), rng.vec_in_cube()));
}

double tomihisa_trial(SplitMix64& rng, const BracketContext& ctx) {
  const std::array<Vec3, 5> ops = {rng.vec_in_cube(), rng.vec_in_cube(),
                                   rng.vec_in_cube(), rng.vec_in_cube(),
                                   rng.vec_in_cube()};
  return euclidean_norm(tomihisa_residual(ctx, TomihisaInstance::standard(ops)));
}

double razmyslov1_trial(SplitMix64& rng, const BracketContext& ctx) {
  return euclidean_norm(
      razmyslov1_residual(ctx, rng.vec_in_cube(), rng.vec_in_cube(),
                          rng.vec_in_cube(), rng.vec_in_cube(),
                          rng.vec_in_cube()));
}

double razmyslov2_trial(SplitMix64& rng, const BracketContext& ctx) {
  return euclidean_norm(razmyslov2_residual(
      ctx, rng.vec_in_cube(), rng.vec_in_cube(), rng.vec_in_cube()));
}

double decomposition_trial(SplitMix64& rng, const BracketContext& ctx) {
  return euclidean_norm(
      tomihisa_decomposition_residual(ctx, rng.vec_in_cube(), rng.vec_in_cube(),
                                      rng.vec_in_cube(), rng.vec_in_cube(),
                                      rng.vec_in_cube()));
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void append_number(std::string& out, std::uint64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void append_check(std::string& out, const CheckResult& c,
                  const std::string& indent) {
  out += indent + "{\"name\": \"" + c.name + "\", \"max_residual\": ";
  append_number(out, c.max_residual);
  out += ", \"tolerance\": ";
  append_number(out, c.tolerance);
  out += ", \"pass\": ";
  out += c.pass ? "true" : "false";
  out += "}";
}

}  // namespace

void ToleranceSet::set(const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw UsageError("tolerance override must be a positive real");
  }
  if (name == "jacobi") {
    jacobi = value;
  } else if (name == "tomihisa") {
    tomihisa = value;
  } else if (name == "razmyslov1") {
    razmyslov1 = value;
  } else if (name == "razmyslov2") {
    razmyslov2 = value;
  } else if (name == "decomposition") {
    decomposition = value;
  } else if (name == "tomihisa_points") {
    tomihisa_points = value;
  } else if (name == "tomihisa_lines") {
    tomihisa_lines = value;
  } else if (name == "pappus") {
    pappus = value;
  } else if (name == "eh_duality") {
    eh_duality = value;
  } else if (name == "orthocenter") {
    orthocenter = value;
  } else {
    throw UsageError("unknown tolerance name: " + name);
  }
}

BracketContext parse_context(const std::string& token) {
  for (const AlgebraKind kind : all_algebra_kinds()) {
    if (token == to_string(kind)) return BracketContext::algebra(kind);
  }
  std::string signs;
  for (const char ch : token) {
    if (ch == '+' || ch == '-') signs.push_back(ch);
  }
  const bool shaped = token.find_first_not_of("sig(),+-") == std::string::npos;
  if (shaped && signs.size() == 3) {
    auto sign = [](char ch) { return ch == '+' ? 1 : -1; };
    return BracketContext::signature(
        Signature::from_signs(sign(signs[0]), sign(signs[1]), sign(signs[2])));
  }
  throw UsageError("unknown context token: " + token);
}

Report run_verify(const VerifyConfig& cfg) {
  if (cfg.trials == 0) {
    throw UsageError("verify requires a positive trial count");
  }

  std::vector<BracketContext> contexts = cfg.contexts;
  if (contexts.empty()) contexts = all_bracket_contexts();

  Report report;
  report.version = kVersion;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.pass = true;

  const ToleranceSet& tol = cfg.tolerances;
  for (const BracketContext& ctx : contexts) {
    ContextReport cr;
    cr.context = ctx.label();
    const std::uint64_t cid = context_id(ctx);
    cr.checks.push_back(run_check("jacobi", tol.jacobi, cfg.trials, cfg.seed,
                                  kJacobi, cid, jacobi_trial, ctx));
    cr.checks.push_back(run_check("tomihisa", tol.tomihisa, cfg.trials,
                                  cfg.seed, kTomihisa, cid, tomihisa_trial,
                                  ctx));
    cr.checks.push_back(run_check("razmyslov1", tol.razmyslov1, cfg.trials,
                                  cfg.seed, kRazmyslov1, cid, razmyslov1_trial,
                                  ctx));
    cr.checks.push_back(run_check("razmyslov2", tol.razmyslov2, cfg.trials,
                                  cfg.seed, kRazmyslov2, cid, razmyslov2_trial,
                                  ctx));
    cr.checks.push_back(run_check("decomposition", tol.decomposition,
                                  cfg.trials, cfg.seed, kDecomposition, cid,
                                  decomposition_trial, ctx));
    for (const CheckResult& c : cr.checks) report.pass = report.pass && c.pass;
    report.contexts.push_back(std::move(cr));
  }

  auto geometry_check = [&](const std::string& name, double tolerance,
                            std::uint64_t check_id, auto&& trial) {
    const std::uint64_t stream = stream_seed(cfg.seed, check_id, 255);
    double max_residual = 0.0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      SplitMix64 rng = SplitMix64::for_trial(stream, t);
      max_residual = std::max(max_residual, trial(rng, t));
    }
    const CheckResult result{name, max_residual, tolerance,
                             max_residual < tolerance};
    report.pass = report.pass && result.pass;
    report.geometry.push_back(result);
  };

  geometry_check("eh_duality", tol.eh_duality, kEhDuality,
                 [](SplitMix64& rng, std::uint64_t t) {
                   return eh_trial(rng, t);
                 });
  geometry_check("tomihisa_points", tol.tomihisa_points, kTomihisaPoints,
                 [](SplitMix64& rng, std::uint64_t) {
                   return tomihisa_points_trial(rng);
                 });
  geometry_check("tomihisa_lines", tol.tomihisa_lines, kTomihisaLines,
                 [](SplitMix64& rng, std::uint64_t) {
                   return tomihisa_lines_trial(rng);
                 });
  geometry_check("pappus", tol.pappus, kPappus,
                 [](SplitMix64& rng, std::uint64_t) {
                   return pappus_trial(rng);
                 });
  geometry_check("orthocenter_sphere", tol.orthocenter, kOrthocenterSphere,
                 [](SplitMix64& rng, std::uint64_t) {
                   return orthocenter_trial(rng, AlgebraKind::Sphere);
                 });
  geometry_check("orthocenter_pseudosphere", tol.orthocenter,
                 kOrthocenterPseudoSphere, [](SplitMix64& rng, std::uint64_t) {
                   return orthocenter_trial(rng, AlgebraKind::PseudoSphere);
                 });
  geometry_check("orthocenter_desitter", tol.orthocenter, kOrthocenterDeSitter,
                 [](SplitMix64& rng, std::uint64_t) {
                   return orthocenter_trial(rng, AlgebraKind::DeSitter);
                 });

  return report;
}

std::string report_to_json(const Report& report) {
  std::string out;
  out += "{\n";
  out += "  \"version\": \"" + report.version + "\",\n";
  out += "  \"seed\": ";
  append_number(out, report.seed);
  out += ",\n  \"trials\": ";
  append_number(out, report.trials);
  out += ",\n  \"pass\": ";
  out += report.pass ? "true" : "false";
  out += ",\n  \"contexts\": [\n";
  for (std::size_t i = 0; i < report.contexts.size(); ++i) {
    const ContextReport& cr = report.contexts[i];
    out += "    {\"context\": \"" + cr.context + "\", \"checks\": [\n";
    for (std::size_t j = 0; j < cr.checks.size(); ++j) {
      append_check(out, cr.checks[j], "      ");
      out += (j + 1 < cr.checks.size()) ? ",\n" : "\n";
    }
    out += "    ]}";
    out += (i + 1 < report.contexts.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"geometry\": [\n";
  for (std::size_t i = 0; i < report.geometry.size(); ++i) {
    append_check(out, report.geometry[i], "    ");
    out += (i + 1 < report.geometry.size()) ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace poisson_geom
