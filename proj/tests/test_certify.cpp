#include <doctest.h>

#include "nframe/certify.hpp"

using namespace nframe;

TEST_CASE("every known id runs clean on a short batch") {
  for (const std::string& id : known_theorem_ids()) {
    RunConfig cfg;
    cfg.theorem = id;
    cfg.seed = 7;
    cfg.count = id == "axioms" ? 100 : 20;
    const CertificationRun run = run_theorem(cfg);
    INFO("theorem ", id);
    CHECK(run.pass);
    CHECK(run.passed == static_cast<int>(run.checks.size()));
  }
}

TEST_CASE("unknown ids are rejected") {
  RunConfig cfg;
  cfg.theorem = "9.9";
  CHECK_THROWS_AS(run_theorem(cfg), input_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RunConfig cfg;
  cfg.theorem = "3.7";
  cfg.seed = 42;
  cfg.count = 10;
  const auto a = run_to_json(run_theorem(cfg), false);
  const auto b = run_to_json(run_theorem(cfg), false);
  CHECK(a.dump() == b.dump());

  // timing is isolated under its own key
  auto with_timing = run_to_json(run_theorem(cfg), true);
  CHECK(with_timing.contains("timing"));
  with_timing.erase("timing");
  CHECK(with_timing.dump() == a.dump());
}

TEST_CASE("fixing the grid dimensions narrows the draws") {
  RunConfig cfg;
  cfg.theorem = "3.4";
  cfg.seed = 5;
  cfg.count = 8;
  cfg.dim = 5;
  cfg.arity = 3;
  const CertificationRun run = run_theorem(cfg);
  CHECK(run.pass);
  for (const auto& c : run.checks) {
    CHECK(c.name.find("d=5") != std::string::npos);
    CHECK(c.name.find("n=3") != std::string::npos);
  }
}
