#include "brim/sweep.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace brim {
namespace {

void validate(const SweepConfig& config) {
  if (config.dim < 1 || config.dim > 3)
    throw Error(errc::unsupported, "sweep dimension must be 1, 2, or 3");
  if (config.rank < 1 || config.rank > 4)
    throw Error(errc::unsupported, "sweep rank must be between 1 and 4");
  if (config.count < 1) throw Error(errc::unsupported, "sweep count must be at least 1");
  if (config.max_exponent < 1)
    throw Error(errc::unsupported, "sweep max exponent must be at least 1");
  if (config.max_extra_generators < 0)
    throw Error(errc::unsupported, "sweep extra generator budget must be nonnegative");
}

const std::set<std::string> kPairChecks = {"cm_fiber", "reduction_bound", "mixed_sum",
                                           "prop_decomposition"};
const std::set<std::string> kAllChecks = {"vasconcelos",  "northcott", "cm_fiber",
                                          "reduction_bound", "sum_formulas", "mixed_sum",
                                          "prop_decomposition"};

// Random numerical semigroup with gcd 1, smallest generator in 2..7.
Ring random_semigroup(std::mt19937_64& rng) {
  const long long g1 = uniform_in(rng, 2, 7);
  std::set<long long> gens = {g1};
  const int extra = static_cast<int>(uniform_in(rng, 1, 3));
  for (int i = 0; i < extra; ++i) gens.insert(uniform_in(rng, g1 + 1, g1 + 12));
  auto gcd_all = [&] {
    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    return g;
  };
  for (int guard = 0; gcd_all() != 1 && guard < 16; ++guard)
    gens.insert(uniform_in(rng, g1 + 1, g1 + 12));
  if (gcd_all() != 1) gens.insert(g1 + 1);
  return Ring::semigroup(std::vector<long long>(gens.begin(), gens.end()));
}

// Random proper semigroup ideal: 2..2+extra exponents drawn from the members
// in [1, frobenius_bound + 3 * max_exponent].
Ideal random_semigroup_ideal(std::mt19937_64& rng, const Ring& ring, const SweepConfig& config) {
  const auto& S = *ring.semigroup_ring();
  const long long top = S.frobenius_bound() + 3 * config.max_exponent + 2;
  std::vector<long long> members;
  for (long long x = 1; x <= top; ++x)
    if (S.is_member(x)) members.push_back(x);
  const int picks = static_cast<int>(uniform_in(rng, 2, 2 + config.max_extra_generators));
  std::set<long long> exponents;
  for (int i = 0; i < picks; ++i)
    exponents.insert(members[static_cast<size_t>(
        uniform_in(rng, 0, static_cast<long long>(members.size()) - 1))]);
  return Ideal(SemigroupIdeal::make(ring.semigroup_ring(),
                                    std::vector<long long>(exponents.begin(), exponents.end())));
}

// Random m-primary monomial ideal: forced pure powers in every variable plus
// a few random monomials inside the box.
Ideal random_monomial_ideal(std::mt19937_64& rng, const Ring& ring, const SweepConfig& config) {
  const int d = ring.dimension();
  std::vector<Exponents> gens;
  for (int i = 0; i < d; ++i) {
    Exponents pure(d, 0);
    pure[i] = uniform_in(rng, 1, config.max_exponent);
    gens.push_back(std::move(pure));
  }
  const int extra = static_cast<int>(uniform_in(rng, 0, config.max_extra_generators));
  for (int k = 0; k < extra; ++k) {
    Exponents e(d, 0);
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      e[i] = uniform_in(rng, 0, config.max_exponent);
      nonzero = nonzero || e[i] > 0;
    }
    if (nonzero) gens.push_back(std::move(e));
  }
  return Ideal(MonomialIdeal::make(ring.monomial(), std::move(gens)));
}

// Box point weakly above the simplex spanned by the pure powers, so the
// enlarged ideal keeps the same integral closure. Falls back to the last
// draw after a few tries; is_reduction remains the final acceptor.
Exponents raised_box_point(std::mt19937_64& rng, const std::vector<long long>& pure,
                           long long max_exponent) {
  const int d = static_cast<int>(pure.size());
  long long scale = 1;
  for (long long a : pure) scale *= a;
  Exponents e(d, 0);
  for (int tries = 0; tries < 16; ++tries) {
    long long weighted = 0;
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      e[static_cast<size_t>(i)] = uniform_in(rng, 0, max_exponent);
      weighted += e[static_cast<size_t>(i)] * (scale / pure[static_cast<size_t>(i)]);
      nonzero = nonzero || e[static_cast<size_t>(i)] > 0;
    }
    if (nonzero && weighted >= scale) return e;
  }
  // Degenerate draw: fall back to a pure power, which minimalize absorbs.
  std::fill(e.begin(), e.end(), 0);
  e[0] = pure[0];
  return e;
}

// J first: parameter-type (pure powers, possibly one extra generator), then
// I = J + random monomials, accepted when J stays a reduction.
std::pair<Ideal, Ideal> random_reduction_pair(std::mt19937_64& rng, const Ring& ring,
                                              const SweepConfig& config, bool& fallback) {
  const int d = ring.dimension();
  // Pure exponents of 1 give an integrally closed J with no proper monomial
  // enlargement to reduce, so the pair draw starts at 2 where possible.
  const long long lo = std::min<long long>(2, config.max_exponent);
  std::vector<long long> pure;
  std::vector<Exponents> j_gens;
  for (int i = 0; i < d; ++i) {
    Exponents e(d, 0);
    e[static_cast<size_t>(i)] = uniform_in(rng, lo, config.max_exponent);
    pure.push_back(e[static_cast<size_t>(i)]);
    j_gens.push_back(std::move(e));
  }
  if (uniform_in(rng, 0, 1) == 1) {
    j_gens.push_back(raised_box_point(rng, pure, config.max_exponent));
  }
  const Ideal J(MonomialIdeal::make(ring.monomial(), j_gens));

  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Exponents> extra;
    const int count = static_cast<int>(uniform_in(rng, 1, std::max(1, config.max_extra_generators)));
    for (int k = 0; k < count; ++k) {
      extra.push_back(raised_box_point(rng, pure, config.max_exponent));
    }
    const Ideal I = J.sum(Ideal(MonomialIdeal::make(ring.monomial(), std::move(extra))));
    if (I.equals(J)) continue;
    if (is_reduction(J, I, config.options.s_max)) {
      fallback = false;
      return {I, J};
    }
  }
  fallback = true;
  return {J, J};
}

std::pair<Ideal, Ideal> random_semigroup_reduction_pair(std::mt19937_64& rng, const Ring& ring,
                                                        const SweepConfig& config,
                                                        bool& fallback) {
  const auto& S = *ring.semigroup_ring();
  std::vector<long long> members;
  const long long lo_top = S.frobenius_bound() + 3 * config.max_exponent + 2;
  for (long long x = 1; x <= lo_top; ++x)
    if (S.is_member(x)) members.push_back(x);
  const long long a = members[static_cast<size_t>(
      uniform_in(rng, 0, static_cast<long long>(members.size()) / 2))];
  const Ideal J(SemigroupIdeal::make(ring.semigroup_ring(), {a}));

  std::vector<long long> above;
  for (long long x : members)
    if (x > a) above.push_back(x);
  for (int attempt = 0; attempt < 24 && !above.empty(); ++attempt) {
    std::set<long long> exponents = {a};
    const int picks = static_cast<int>(uniform_in(rng, 1, 1 + config.max_extra_generators));
    for (int i = 0; i < picks; ++i)
      exponents.insert(above[static_cast<size_t>(
          uniform_in(rng, 0, static_cast<long long>(above.size()) - 1))]);
    const Ideal I(SemigroupIdeal::make(
        ring.semigroup_ring(), std::vector<long long>(exponents.begin(), exponents.end())));
    if (I.equals(J)) continue;
    if (is_reduction(J, I, config.options.s_max)) {
      fallback = false;
      return {I, J};
    }
  }
  fallback = true;
  return {J, J};
}

ScriptCommand command_for(const SweepInstance& instance, const DirectSumModule& module,
                          const std::string& check, const SweepConfig& config) {
  ScriptCommand cmd;
  cmd.text = "sweep " + check;
  if (check == "vasconcelos") {
    cmd.kind = ScriptCommand::Kind::vasconcelos;
    cmd.module = module;
  } else if (check == "northcott") {
    cmd.kind = ScriptCommand::Kind::northcott;
    cmd.module = module;
  } else if (check == "cm_fiber") {
    cmd.kind = ScriptCommand::Kind::cm_fiber;
    cmd.ideal = instance.summands.front();
    cmd.reduction = instance.reduction;
  } else if (check == "reduction_bound") {
    cmd.kind = ScriptCommand::Kind::reduction_bound;
    cmd.ideal = instance.summands.front();
    cmd.reduction = instance.reduction;
  } else if (check == "sum_formulas") {
    cmd.kind = ScriptCommand::Kind::sum_formulas;
    cmd.ideal = instance.summands.front();
    cmd.rank = config.rank;
  } else if (check == "mixed_sum") {
    cmd.kind = ScriptCommand::Kind::mixed_sum;
    cmd.ideal = instance.summands.front();
    cmd.reduction = instance.reduction;
    cmd.copies_first = (config.rank + 1) / 2;
    cmd.copies_second = std::max(1, config.rank / 2);
  } else if (check == "prop_decomposition") {
    cmd.kind = ScriptCommand::Kind::prop_decomposition;
    cmd.ideal = instance.summands.front();
    cmd.reduction = instance.reduction;
  } else {
    throw Error(errc::unsupported, "unknown check '" + check + "'");
  }
  return cmd;
}

}  // namespace

long long uniform_in(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;  // hi >= lo
  const std::uint64_t threshold = (-range) % range;                    // 2^64 mod range
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return lo + static_cast<long long>(x % range);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0xb5297a4dU};
  return std::mt19937_64(seq);
}

SweepInstance generate_instance(const SweepConfig& config, std::uint64_t index) {
  validate(config);
  std::mt19937_64 rng = instance_rng(config.seed, index);

  const Ring ring = config.dim == 1
                        ? random_semigroup(rng)
                        : Ring::power_series(config.dim == 2
                                                 ? std::vector<std::string>{"x", "y"}
                                                 : std::vector<std::string>{"x", "y", "z"});
  if (config.mixed) {
    bool fallback = false;
    auto [I, J] = config.dim == 1
                      ? random_semigroup_reduction_pair(rng, ring, config, fallback)
                      : random_reduction_pair(rng, ring, config, fallback);
    std::vector<Ideal> summands;
    const int u = (config.rank + 1) / 2;
    for (int i = 0; i < config.rank; ++i) summands.push_back(i < u ? I : J);
    return SweepInstance{ring, std::move(summands), J, fallback};
  }

  std::vector<Ideal> summands;
  for (int i = 0; i < config.rank; ++i)
    summands.push_back(config.dim == 1 ? random_semigroup_ideal(rng, ring, config)
                                       : random_monomial_ideal(rng, ring, config));
  return SweepInstance{ring, std::move(summands), std::nullopt, false};
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  SweepConfig effective = config;
  for (const std::string& check : effective.checks) {
    if (kAllChecks.count(check) == 0)
      throw Error(errc::unsupported, "unknown check '" + check + "'");
    if (kPairChecks.count(check) != 0) effective.mixed = true;
  }
  if (effective.checks.empty()) throw Error(errc::unsupported, "no checks selected");
  if (std::find(effective.checks.begin(), effective.checks.end(), "mixed_sum") !=
          effective.checks.end() &&
      effective.rank < 2)
    throw Error(errc::unsupported, "mixed_sum needs rank at least 2");

  Json instances = Json::array();
  std::map<std::string, int> verdict_count = {
      {"HOLDS", 0}, {"EQUALITY", 0}, {"VIOLATED", 0}, {"INAPPLICABLE", 0}};
  int errors = 0;
  int fit_failures = 0;
  int sally_negative = 0, sally_zero = 0, sally_positive = 0;
  Json sally_leadings = Json::array();
  int exit_code = 0;

  for (int index = 0; index < effective.count; ++index) {
    Json entry = Json::object();
    entry["index"] = index;
    try {
      const SweepInstance instance = generate_instance(effective, index);
      entry["ring"] = instance.ring.to_string();
      Json summands = Json::array();
      for (const Ideal& ideal : instance.summands) summands.push_back(ideal.to_string());
      entry["summands"] = summands;
      if (instance.reduction) entry["reduction"] = instance.reduction->to_string();
      if (instance.fallback) entry["fallback"] = true;

      const DirectSumModule module = DirectSumModule::make(instance.summands);

      Json reports = Json::array();
      for (const std::string& check : effective.checks) {
        const ScriptCommand cmd = command_for(instance, module, check, effective);
        CheckReport report = run_check_command(cmd, effective.options);
        if (report.verdict == Verdict::violated) {
          report.witness["replay"] = replay_for_command(cmd);
          exit_code = combine_exit_codes(exit_code, 1);
        }
        if (report.fit_failed) {
          ++fit_failures;
          exit_code = combine_exit_codes(exit_code, 3);
        }
        verdict_count[verdict_name(report.verdict)] += 1;
        reports.push_back(to_json(report));
      }
      entry["reports"] = reports;

      // Sally polynomial leading coefficients in dimension 2, sign-tallied
      // as empirical evidence; negative values are counterexample flags.
      if (effective.dim == 2) {
        const SallyPolynomial sally = sally_polynomial(module_invariants(module, effective.options.fit));
        entry["sally_leading"] = json_int(sally.leading);
        sally_leadings.push_back(json_int(sally.leading));
        if (sally.leading < 0)
          ++sally_negative;
        else if (sally.leading == 0)
          ++sally_zero;
        else
          ++sally_positive;
      }
    } catch (const Error& e) {
      entry["error"] = e.what();
      entry["error_kind"] = errc_name(e.code());
      ++errors;
      exit_code =
          combine_exit_codes(exit_code, e.code() == errc::not_stabilized ? 3 : 2);
    }
    instances.push_back(std::move(entry));
  }

  Json summary = Json::object();
  summary["instances"] = effective.count;
  Json verdicts = Json::object();
  for (const auto& [name, count] : verdict_count) verdicts[name] = count;
  summary["verdicts"] = verdicts;
  summary["errors"] = errors;
  summary["fit_failures"] = fit_failures;
  if (effective.dim == 2) {
    Json sally = Json::object();
    sally["negative"] = sally_negative;
    sally["zero"] = sally_zero;
    sally["positive"] = sally_positive;
    summary["sally_leading_signs"] = sally;
    summary["sally_leadings"] = sally_leadings;
  }

  Json doc = Json::object();
  doc["version"] = kVersionBanner;
  Json cfg = Json::object();
  cfg["dim"] = effective.dim;
  cfg["rank"] = effective.rank;
  cfg["count"] = effective.count;
  cfg["seed"] = effective.seed;
  cfg["max_exponent"] = effective.max_exponent;
  cfg["max_extra_generators"] = effective.max_extra_generators;
  cfg["checks"] = effective.checks;
  cfg["mixed"] = effective.mixed;
  cfg["n_max"] = effective.options.fit.n_max;
  cfg["verify_window"] = effective.options.fit.verify_window;
  cfg["s_max"] = effective.options.s_max;
  doc["config"] = cfg;
  doc["instances"] = instances;
  doc["summary"] = summary;
  doc["exit_code"] = exit_code;

  return SweepResult{exit_code, std::move(doc)};
}

}  // namespace brim
