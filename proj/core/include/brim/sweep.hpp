#pragma once

#include "brim/script.hpp"

#include <cstdint>
#include <random>

namespace brim {

struct SweepConfig {
  int dim = 2;   // 1 (semigroup), 2 or 3 (power series)
  int rank = 2;  // summands per module, 1..4
  int count = 10;
  std::uint64_t seed = 0;
  long long max_exponent = 5;     // exponent box for generated monomials
  int max_extra_generators = 3;   // on top of the forced pure powers
  std::vector<std::string> checks = {"vasconcelos"};
  bool mixed = false;  // draw (I, J) reduction pairs; forced on by pair checks
  CheckOptions options;
};

// Unbiased integer in [lo, hi] by rejection; the standard distributions are
// not byte-stable across library implementations, the raw engine is.
long long uniform_in(std::mt19937_64& rng, long long lo, long long hi);

// The engine is a pure function of (seed, index), so any instance can be
// regenerated in isolation.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

struct SweepInstance {
  Ring ring;
  // rank ideals; the module under test is their direct sum. In mixed mode
  // the first ceil(rank/2) are I and the rest are J.
  std::vector<Ideal> summands;
  std::optional<Ideal> reduction;  // J with is_reduction(J, I), mixed mode only
  bool fallback = false;           // sampling budget exhausted, pair is (I, I)
};

SweepInstance generate_instance(const SweepConfig& config, std::uint64_t index);

struct SweepResult {
  int exit_code = 0;
  Json document;
};

SweepResult run_sweep(const SweepConfig& config);

}  // namespace brim
