// Command-line surface: identity fuzzing with JSON reports, theorem demos,
// SVG figure emission and one-off bracket computations.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poisson_geom/errors.hpp"
#include "poisson_geom/figures.hpp"
#include "poisson_geom/identities.hpp"
#include "poisson_geom/projective.hpp"
#include "poisson_geom/rng.hpp"
#include "poisson_geom/surface.hpp"
#include "poisson_geom/verify.hpp"
#include "poisson_geom/version.hpp"

namespace {

using nlohmann::json;
using namespace poisson_geom;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::uint64_t env_seed_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("POISSON_GEOM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("POISSON_GEOM_SEED must be a 64-bit unsigned integer");
    }
  }
  return fallback;
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output path: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Vec3 triple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
      !j[1].is_number() || !j[2].is_number()) {
    throw UsageError("expected a [X,Y,Z] number triple");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <std::size_t N>
std::array<Vec3, N> triples_from_json(const json& j) {
  if (!j.is_array() || j.size() != N) {
    throw UsageError("expected an array of " + std::to_string(N) +
                     " [X,Y,Z] triples");
  }
  std::array<Vec3, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = triple_from_json(j[i]);
  return out;
}

Vec3 parse_triple_arg(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      ch = ' ';
    }
  }
  std::istringstream is(cleaned);
  Vec3 v;
  if (!(is >> v.x >> v.y >> v.z)) {
    throw UsageError("expected a triple like 1,0,0: " + text);
  }
  std::string rest;
  if (is >> rest) throw UsageError("trailing input in triple: " + text);
  return v;
}

std::vector<BracketContext> parse_contexts_flag(const std::string& flag) {
  std::vector<BracketContext> out;
  if (flag.empty() || flag == "all") return out;  // empty means all
  std::stringstream ss(flag);
  std::string token;
  while (std::getline(ss, token, ';')) {
    if (!token.empty()) out.push_back(parse_context(token));
  }
  if (out.empty()) throw UsageError("no contexts in: " + flag);
  return out;
}

FigureSpec figure_spec_from_options(FigureKind kind,
                                    const std::string& config_path,
                                    const std::string& triangle_flag) {
  FigureSpec spec = FigureSpec::defaults(kind);
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config: " + config_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    switch (kind) {
      case FigureKind::SphericalAltitudes:
      case FigureKind::DiscAltitudes:
        if (j.contains("triangle")) {
          spec.triangle = triples_from_json<3>(j["triangle"]);
        }
        if (kind == FigureKind::DiscAltitudes && j.contains("conic")) {
          const json& c = j["conic"];
          if (!c.is_array() || c.size() != 6) {
            throw UsageError("conic expects a 6-entry upper-triangle array");
          }
          for (int i = 0; i < 6; ++i) {
            if (!c[i].is_number()) {
              throw UsageError("conic entries must be numbers");
            }
            spec.disc_conic[i] = c[i].get<double>();
          }
        }
        break;
      case FigureKind::EhDuality:
        if (j.contains("point")) spec.eh_point = triple_from_json(j["point"]);
        break;
      case FigureKind::Pappus:
        if (j.contains("a")) spec.pappus_a = triples_from_json<3>(j["a"]);
        if (j.contains("b")) spec.pappus_b = triples_from_json<3>(j["b"]);
        break;
      case FigureKind::TomihisaIncidence:
        if (j.contains("points")) {
          spec.tomihisa_points = triples_from_json<5>(j["points"]);
        }
        break;
    }
  }
  if (!triangle_flag.empty() && triangle_flag != "default") {
    json j;
    try {
      j = json::parse(triangle_flag);
    } catch (const json::exception&) {
      throw UsageError("--triangle expects 'default' or a JSON array of "
                       "three triples");
    }
    spec.triangle = triples_from_json<3>(j);
  }
  return spec;
}

// The computed geometry of a figure as JSON, for --format json.
std::string figure_as_json(const FigureSpec& spec) {
  json j;
  j["figure"] = to_string(spec.kind);
  auto triple = [](const Vec3& v) { return json::array({v.x, v.y, v.z}); };
  switch (spec.kind) {
    case FigureKind::SphericalAltitudes: {
      const Triangle t = make_triangle(AlgebraKind::Sphere, spec.triangle[0],
                                       spec.triangle[1], spec.triangle[2]);
      const SurfacePoint h = orthocenter(t);
      j["triangle"] = json::array({triple(spec.triangle[0]),
                                   triple(spec.triangle[1]),
                                   triple(spec.triangle[2])});
      j["orthocenter"] = triple(h.rep);
      j["third_altitude_residual"] = membership_residual(altitude(t, 2), h);
      break;
    }
    case FigureKind::DiscAltitudes: {
      const Conic conic = Conic::from_upper_triangle(spec.disc_conic);
      std::array<ProjPoint, 3> tri;
      for (int i = 0; i < 3; ++i) tri[i] = project(spec.triangle[i]);
      std::array<ProjLine, 3> alts;
      for (int i = 0; i < 3; ++i) {
        alts[i] = projective_altitude(conic, tri, i);
      }
      j["triangle"] = json::array({triple(spec.triangle[0]),
                                   triple(spec.triangle[1]),
                                   triple(spec.triangle[2])});
      j["conic"] = spec.disc_conic;
      j["orthocenter"] = triple(meet(alts[0], alts[1]).h);
      j["concurrency_residual"] = concurrent(alts[0], alts[1], alts[2]);
      break;
    }
    case FigureKind::EhDuality: {
      const ProjLine e = line_of(spec.eh_point, DualityModel::Euclidean);
      const ProjLine hl = line_of(spec.eh_point, DualityModel::Hyperbolic);
      j["point"] = triple(spec.eh_point);
      j["dual_line_euclidean"] = triple(e.h);
      j["dual_line_hyperbolic"] = triple(hl.h);
      break;
    }
    case FigureKind::Pappus: {
      std::array<ProjPoint, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = project(spec.pappus_a[i]);
        b[i] = project(spec.pappus_b[i]);
      }
      const PappusResult r = pappus_check(make_pappus_config(a, b));
      j["cross_points"] = json::array({triple(r.cross[0].h),
                                       triple(r.cross[1].h),
                                       triple(r.cross[2].h)});
      j["collinearity_residual"] = r.residual;
      break;
    }
    case FigureKind::TomihisaIncidence: {
      std::array<ProjPoint, 5> pts;
      for (int i = 0; i < 5; ++i) pts[i] = project(spec.tomihisa_points[i]);
      j["concurrency_residual"] = tomihisa_geometric(pts);
      break;
    }
  }
  return j.dump(2) + "\n";
}

int cmd_verify(std::uint64_t seed, std::uint64_t trials,
               const std::string& contexts_flag,
               const std::vector<std::string>& tol_flags,
               const std::string& out_path, const std::string& format) {
  if (format != "json") {
    throw UsageError("verify supports --format json only");
  }
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.contexts = parse_contexts_flag(contexts_flag);
  for (const std::string& flag : tol_flags) {
    const std::size_t eq = flag.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--tol expects name=value: " + flag);
    }
    double value = 0.0;
    try {
      value = std::stod(flag.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--tol expects a real value: " + flag);
    }
    cfg.tolerances.set(flag.substr(0, eq), value);
  }
  const Report report = run_verify(cfg);
  write_output(out_path, report_to_json(report));
  return report.pass ? kExitOk : kExitPropertyFailure;
}

int cmd_figure(const std::string& name, const std::string& config_path,
               const std::string& triangle_flag, const std::string& out_path,
               const std::string& format) {
  const FigureKind kind = figure_kind_from_name(name);
  const FigureSpec spec =
      figure_spec_from_options(kind, config_path, triangle_flag);
  if (format == "svg") {
    write_output(out_path, render_figure(spec));
  } else if (format == "json") {
    write_output(out_path, figure_as_json(spec));
  } else {
    throw UsageError("figure supports --format svg or json");
  }
  return kExitOk;
}

int cmd_demo(const std::string& name, std::uint64_t seed) {
  std::ostringstream out;
  char buf[64];
  auto sci = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return std::string(buf);
  };
  if (name == "orthocenter") {
    SplitMix64 rng(seed);
    const FigureSpec spec = FigureSpec::defaults(FigureKind::SphericalAltitudes);
    const Triangle t = make_triangle(AlgebraKind::Sphere, spec.triangle[0],
                                     spec.triangle[1], spec.triangle[2]);
    const SurfacePoint h = orthocenter(t);
    out << "spherical triangle altitudes meet at a single antipodal pair\n";
    out << "orthocenter pair: (" << h.rep.x << ", " << h.rep.y << ", "
        << h.rep.z << ")\n";
    out << "third-altitude membership residual: "
        << sci(membership_residual(altitude(t, 2), h)) << "\n";
  } else if (name == "eh") {
    const ProjLine le = line_of({2.0, 0.0, 1.0}, DualityModel::Euclidean);
    const ProjLine lh = line_of({2.0, 0.0, 1.0}, DualityModel::Hyperbolic);
    const ProjLine x_axis{{0.0, 1.0, 0.0}};
    const auto b = affine_view(meet(le, x_axis));
    const auto c = affine_view(meet(lh, x_axis));
    out << "dual lines of the point (2,0) meet the x-axis at:\n";
    out << "  euclidean duality:  x = " << b.first << "\n";
    out << "  hyperbolic duality: x = " << c.first << "\n";
    out << "the two duals are central reflections of each other\n";
  } else if (name == "pappus") {
    const FigureSpec spec = FigureSpec::defaults(FigureKind::Pappus);
    std::array<ProjPoint, 3> a, b;
    for (int i = 0; i < 3; ++i) {
      a[i] = project(spec.pappus_a[i]);
      b[i] = project(spec.pappus_b[i]);
    }
    const PappusResult r = pappus_check(make_pappus_config(a, b));
    const PappusViaTomihisa via =
        pappus_via_tomihisa(a[0], a[1], a[2], b[0], b[1], b[2]);
    out << "pappus cross points are collinear\n";
    out << "  direct collinearity residual:   " << sci(r.residual) << "\n";
    out << "  three-term bracket residual:    " << sci(via.residual) << "\n";
    out << "  M,N,P collinearity residual:    " << sci(via.mnp_collinearity)
        << "\n";
  } else if (name == "tomihisa") {
    const FigureSpec spec =
        FigureSpec::defaults(FigureKind::TomihisaIncidence);
    std::array<ProjPoint, 5> pts;
    for (int i = 0; i < 5; ++i) pts[i] = project(spec.tomihisa_points[i]);
    SplitMix64 rng(seed);
    const std::array<Vec3, 5> ops = {rng.vec_in_cube(), rng.vec_in_cube(),
                                     rng.vec_in_cube(), rng.vec_in_cube(),
                                     rng.vec_in_cube()};
    const Vec3 alg = tomihisa_residual(BracketContext::algebra(AlgebraKind::Sphere),
                                       TomihisaInstance::standard(ops));
    out << "three-term degree-5 identity, two readings\n";
    out << "  algebraic residual (sphere bracket): "
        << sci(euclidean_norm(alg)) << "\n";
    out << "  geometric concurrency residual:      "
        << sci(tomihisa_geometric(pts)) << "\n";
  } else {
    throw UsageError("unknown demo: " + name);
  }
  std::fputs(out.str().c_str(), stdout);
  return kExitOk;
}

int cmd_bracket(const std::string& context, const std::string& u_text,
                const std::string& v_text, const std::string& format) {
  const BracketContext ctx = parse_context(context);
  const Vec3 u = parse_triple_arg(u_text);
  const Vec3 v = parse_triple_arg(v_text);
  Vec3 w = ctx.bracket(u, v);
  // Present negative zeros as plain zeros.
  if (w.x == 0.0) w.x = 0.0;
  if (w.y == 0.0) w.y = 0.0;
  if (w.z == 0.0) w.z = 0.0;
  if (format == "json") {
    json j;
    j["context"] = ctx.label();
    j["result"] = json::array({w.x, w.y, w.z});
    std::fputs((j.dump(2) + "\n").c_str(), stdout);
  } else if (format == "text") {
    std::printf("%.17g %.17g %.17g\n", w.x, w.y, w.z);
  } else {
    throw UsageError("bracket supports --format text or json");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson/Lie algebras of first-degree harmonics and the "
               "projective geometry they induce"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the seeded identity/theorem suites and emit a JSON report");
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t trials = 1000;
  std::string contexts_flag = "all";
  std::vector<std::string> tol_flags;
  std::string out_path;
  std::string verify_format = "json";
  verify->add_option("--seed", seed, "64-bit seed (fallback: POISSON_GEOM_SEED, then 42)")
      ->each([&](const std::string&) { seed_given = true; });
  verify->add_option("--trials", trials, "Trials per check and context");
  verify->add_option("--contexts", contexts_flag,
                     "'all' or ';'-separated list (e.g. 'sphere;+,+,-')");
  verify->add_option("--tol", tol_flags,
                     "Tolerance override name=value (repeatable)");
  verify->add_option("--out", out_path, "Report path (default: stdout)");
  verify->add_option("--format", verify_format, "json");

  // figure
  auto* figure = app.add_subcommand("figure", "Emit an SVG figure");
  std::string figure_name;
  std::string config_path;
  std::string triangle_flag;
  std::string figure_out;
  std::string figure_format = "svg";
  figure->add_option("name", figure_name,
                     "spherical-altitudes | disc-altitudes | eh-duality | "
                     "pappus | tomihisa-incidence")
      ->required();
  figure->add_option("--config", config_path, "Geometry inputs (JSON file)");
  figure->add_option("--triangle", triangle_flag,
                     "'default' or inline JSON [[X,Y,Z],...]");
  figure->add_option("--out", figure_out, "Output path (default: stdout)");
  figure->add_option("--format", figure_format, "svg | json");

  // demo
  auto* demo = app.add_subcommand("demo", "Print a worked theorem example");
  std::string demo_name;
  demo->add_option("name", demo_name, "orthocenter | eh | pappus | tomihisa")
      ->required();
  std::uint64_t demo_seed = 0;
  bool demo_seed_given = false;
  demo->add_option("--seed", demo_seed, "64-bit seed")
      ->each([&](const std::string&) { demo_seed_given = true; });

  // bracket
  auto* bracket = app.add_subcommand(
      "bracket", "Compute one bracket from two coefficient triples");
  std::string bracket_context;
  std::string bracket_u, bracket_v;
  std::string bracket_format = "text";
  bracket->add_option("--context", bracket_context,
                      "Algebra kind or signature (e.g. sphere, '+,+,-')")
      ->required();
  bracket->add_option("u", bracket_u, "First triple, e.g. 1,0,0")->required();
  bracket->add_option("v", bracket_v, "Second triple")->required();
  bracket->add_option("--format", bracket_format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const std::uint64_t effective_seed =
          seed_given ? seed : env_seed_or(42);
      return cmd_verify(effective_seed, trials, contexts_flag, tol_flags,
                        out_path, verify_format);
    }
    if (figure->parsed()) {
      return cmd_figure(figure_name, config_path, triangle_flag, figure_out,
                        figure_format);
    }
    if (demo->parsed()) {
      const std::uint64_t effective_seed =
          demo_seed_given ? demo_seed : env_seed_or(42);
      return cmd_demo(demo_name, effective_seed);
    }
    if (bracket->parsed()) {
      return cmd_bracket(bracket_context, bracket_u, bracket_v,
                         bracket_format);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  }
  return kExitUsage;
}
