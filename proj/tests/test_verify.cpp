#include <doctest.h>

#include "poisson_geom/errors.hpp"
#include "poisson_geom/verify.hpp"

using namespace poisson_geom;

TEST_CASE("verify rejects empty runs") {
  VerifyConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_verify(cfg), UsageError);
}

TEST_CASE("verify covers all twelve contexts and passes") {
  VerifyConfig cfg;
  cfg.seed = 42;
  cfg.trials = 30;
  const Report report = run_verify(cfg);
  CHECK(report.pass);
  CHECK(report.contexts.size() == 12);
  for (const ContextReport& cr : report.contexts) {
    CHECK(cr.checks.size() == 5);
    for (const CheckResult& c : cr.checks) CHECK(c.pass);
  }
  CHECK(report.geometry.size() == 7);
  for (const CheckResult& c : report.geometry) CHECK(c.pass);
}

TEST_CASE("reports are deterministic") {
  VerifyConfig cfg;
  cfg.seed = 7;
  cfg.trials = 25;
  const std::string a = report_to_json(run_verify(cfg));
  const std::string b = report_to_json(run_verify(cfg));
  CHECK(a == b);
}

TEST_CASE("narrowed context lists reproduce the full run") {
  VerifyConfig full;
  full.seed = 11;
  full.trials = 20;
  const Report all = run_verify(full);

  VerifyConfig narrowed = full;
  narrowed.contexts = {parse_context("sphere")};
  const Report one = run_verify(narrowed);
  REQUIRE(one.contexts.size() == 1);
  const ContextReport* sphere_full = nullptr;
  for (const ContextReport& cr : all.contexts) {
    if (cr.context == "sphere") sphere_full = &cr;
  }
  REQUIRE(sphere_full != nullptr);
  for (std::size_t i = 0; i < one.contexts[0].checks.size(); ++i) {
    CHECK(one.contexts[0].checks[i].max_residual ==
          sphere_full->checks[i].max_residual);
  }
}

TEST_CASE("tolerance overrides can force a property failure") {
  VerifyConfig cfg;
  cfg.seed = 3;
  cfg.trials = 10;
  cfg.tolerances.set("jacobi", 1e-30);
  const Report report = run_verify(cfg);
  CHECK_FALSE(report.pass);

  CHECK_THROWS_AS(cfg.tolerances.set("no-such-check", 1e-9), UsageError);
  CHECK_THROWS_AS(cfg.tolerances.set("jacobi", -1.0), UsageError);
}

TEST_CASE("context tokens parse") {
  CHECK(parse_context("sphere").label() == "sphere");
  CHECK(parse_context("quadratic").label() == "quadratic");
  CHECK(parse_context("+,+,-").label() == "sig(+,+,-)");
  CHECK(parse_context("+++").label() == "sig(+,+,+)");
  CHECK(parse_context("sig(-,+,-)").label() == "sig(-,+,-)");
  CHECK_THROWS_AS(parse_context("octonion"), UsageError);
  CHECK_THROWS_AS(parse_context("++"), UsageError);
}
