#include "brim/sweep.hpp"

#include "brim/invariants.hpp"

#include <doctest.h>

#include <set>
#include <string>

using brim::SweepConfig;

TEST_CASE("uniform_in stays in range and covers small ranges") {
  auto rng = brim::instance_rng(42, 0);
  std::set<long long> seen;
  for (int k = 0; k < 300; ++k) {
    const long long v = brim::uniform_in(rng, 2, 5);
    CHECK(v >= 2);
    CHECK(v <= 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 4);
  CHECK(brim::uniform_in(rng, 7, 7) == 7);
}

TEST_CASE("instance generation is deterministic in seed and index") {
  SweepConfig config;
  config.dim = 2;
  config.rank = 3;
  config.seed = 911;
  for (long long index : {0, 1, 5}) {
    const auto a = brim::generate_instance(config, index);
    const auto b = brim::generate_instance(config, index);
    REQUIRE(a.summands.size() == b.summands.size());
    for (size_t i = 0; i < a.summands.size(); ++i)
      CHECK(a.summands[i].to_string() == b.summands[i].to_string());
    CHECK(a.ring.to_string() == b.ring.to_string());
  }
  // Different indices give different data somewhere in a short run.
  std::set<std::string> flavors;
  for (long long index = 0; index < 6; ++index)
    flavors.insert(brim::generate_instance(config, index).summands[0].to_string());
  CHECK(flavors.size() > 1);
}

TEST_CASE("generated instances satisfy the advertised shape") {
  for (int dim : {1, 2, 3}) {
    SweepConfig config;
    config.dim = dim;
    config.rank = 2;
    config.seed = 7;
    for (long long index = 0; index < 8; ++index) {
      const auto inst = brim::generate_instance(config, index);
      CHECK(inst.ring.dimension() == dim);
      CHECK(inst.summands.size() == 2);
      for (const auto& ideal : inst.summands) {
        CHECK(ideal.is_m_primary());
        CHECK(ideal.is_proper());
      }
      CHECK_FALSE(inst.reduction.has_value());
    }
  }
}

TEST_CASE("mixed instances carry a genuine reduction pair") {
  for (int dim : {1, 2, 3}) {
    SweepConfig config;
    config.dim = dim;
    config.rank = 2;
    config.mixed = true;
    config.seed = 19;
    int fallbacks = 0;
    for (long long index = 0; index < 10; ++index) {
      const auto inst = brim::generate_instance(config, index);
      REQUIRE(inst.reduction.has_value());
      const auto& I = inst.summands.front();
      CHECK(I.contains(*inst.reduction));
      CHECK(brim::is_reduction(*inst.reduction, I));
      if (inst.fallback) {
        ++fallbacks;
        CHECK(inst.reduction->equals(I));
      }
    }
    CHECK(fallbacks <= 3);
  }
}

TEST_CASE("configuration validation") {
  SweepConfig config;
  config.dim = 4;
  CHECK_THROWS_AS(brim::generate_instance(config, 0), brim::Error);
  config.dim = 2;
  config.rank = 0;
  CHECK_THROWS_AS(brim::generate_instance(config, 0), brim::Error);
  config.rank = 2;
  config.checks = {"unheard_of"};
  CHECK_THROWS_AS(brim::run_sweep(config), brim::Error);
  config.checks = {"mixed_sum"};
  config.rank = 1;
  CHECK_THROWS_AS(brim::run_sweep(config), brim::Error);
}

TEST_CASE("sweep documents are deterministic and well formed") {
  SweepConfig config;
  config.dim = 2;
  config.rank = 2;
  config.count = 4;
  config.seed = 1234;
  config.checks = {"vasconcelos", "northcott"};
  const auto a = brim::run_sweep(config);
  const auto b = brim::run_sweep(config);
  CHECK(a.document.dump() == b.document.dump());

  CHECK(a.document["config"]["dim"] == 2);
  CHECK(a.document["config"]["seed"] == 1234);
  CHECK(a.document["instances"].size() == 4);
  long long verdicts = 0;
  for (const auto& [name, count] : a.document["summary"]["verdicts"].items())
    verdicts += count.get<long long>();
  CHECK(verdicts == 8);
  CHECK(a.document["summary"]["instances"] == 4);
  CHECK(a.document["summary"].contains("sally_leading_signs"));
  CHECK(a.exit_code == 0);
}

TEST_CASE("pair checks force mixed generation") {
  SweepConfig config;
  config.dim = 1;
  config.rank = 2;
  config.count = 3;
  config.seed = 5;
  config.checks = {"cm_fiber", "vasconcelos"};
  const auto result = brim::run_sweep(config);
  for (const auto& inst : result.document["instances"]) {
    CHECK(inst.contains("reduction"));
    // The gate can only be INAPPLICABLE through fit trouble, never through
    // a non-reduction, because generation certifies the pair.
    for (const auto& report : inst["reports"]) {
      if (report["check_name"] == "cm_fiber" && report["verdict"] == "INAPPLICABLE")
        CHECK(report["fit_failed"] == true);
    }
  }
}

TEST_CASE("dimension two sweeps record sally leading signs") {
  SweepConfig config;
  config.dim = 2;
  config.rank = 2;
  config.count = 5;
  config.seed = 21;
  config.checks = {"vasconcelos"};
  const auto result = brim::run_sweep(config);
  const auto& signs = result.document["summary"]["sally_leading_signs"];
  const long long total = signs["negative"].get<long long>() + signs["zero"].get<long long>() +
                          signs["positive"].get<long long>();
  CHECK(total == 5);
  CHECK(result.document["summary"]["sally_leadings"].size() == 5);
}
