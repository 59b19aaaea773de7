#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/verify.hpp"

using namespace masi;

TEST_CASE("check registry") {
  const auto names = verify_check_names();
  CHECK(names.size() >= 40);
  for (const char* prefix : {"linalg.", "monotone.", "skew.", "mub.", "coherence.", "correlation.", "prop3.", "prop4.",
                             "prop5.", "duality.", "states.", "twirl."}) {
    bool found = false;
    for (const auto& n : names) found = found || n.rfind(prefix, 0) == 0;
    CHECK_MESSAGE(found, prefix);
  }
}

TEST_CASE("filtered runs") {
  VerifyConfig cfg;
  cfg.only = "duality.";
  const VerifyReport r = run_verify(cfg);
  CHECK(r.all_passed());
  CHECK(!r.checks.empty());
  for (const auto& c : r.checks) {
    CHECK(c.name.rfind("duality.", 0) == 0);
    CHECK(c.max_residual <= c.tolerance);
    CHECK(c.cases > 0);
  }
  const auto j = to_json(r);
  CHECK(j["total"] == r.checks.size());
  CHECK(j["failed"] == 0);
  CHECK(!j.contains("seconds"));

  cfg.only = "zzz";
  CHECK_THROWS_AS(run_verify(cfg), Error);
  cfg.only = "prop4";
  cfg.samples = 1;
  CHECK_THROWS_AS(run_verify(cfg), Error);
}

TEST_CASE("tolerance override") {
  VerifyConfig cfg;
  cfg.only = "prop4.";
  cfg.tolerance = 1e-15;
  const VerifyReport tight = run_verify(cfg);
  CHECK(!tight.all_passed());
  for (const auto& c : tight.checks)
    if (c.kind == CheckKind::Deterministic) CHECK(c.tolerance == 1e-15);

  cfg.only = "prop3.strict";
  const VerifyReport strict = run_verify(cfg);
  for (const auto& c : strict.checks) {
    CHECK(c.kind == CheckKind::Strict);
    CHECK(c.tolerance == 0.0);
  }
}

TEST_CASE("reports are deterministic") {
  VerifyConfig cfg;
  cfg.only = "coherence.four_way";
  cfg.seed = 3;
  CHECK(to_json(run_verify(cfg)) == to_json(run_verify(cfg)));
  CHECK(to_string(CheckKind::Statistical) == "statistical");
}
