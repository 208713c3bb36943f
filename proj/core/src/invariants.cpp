#include "brim/invariants.hpp"

#include <functional>

namespace brim {

long long default_n_max(int dim, int rank) { return 4LL * (dim + rank); }

namespace {

// Builds windows of f(0..n_max) and retries with doubled n_max while the
// differences have not stabilized.
FitResult fit_with_retries(const std::function<Int(long long)>& value, int degree,
                           const FitOptions& options, Convention convention, long long n_start) {
  long long n_max = n_start;
  if (n_max > options.n_ceiling) n_max = options.n_ceiling;
  while (true) {
    IntegerSequenceWindow window;
    window.n_lo = 0;
    window.values.reserve(static_cast<size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n) window.values.push_back(value(n));
    try {
      return fit_polynomial(window, degree, options.verify_window, convention);
    } catch (const Error& err) {
      if (err.code() != errc::not_stabilized || n_max >= options.n_ceiling) throw;
      n_max = std::min(options.n_ceiling, 2 * n_max);
    }
  }
}

}  // namespace

IdealInvariants ideal_invariants(const Ideal& ideal, const FitOptions& options) {
  if (!ideal.is_m_primary()) {
    throw Error(errc::non_primary, "invariants need an m-primary ideal, got " + ideal.to_string());
  }
  const int d = ideal.dimension();
  const long long n_start = options.n_max > 0 ? options.n_max : default_n_max(d, 1);

  ProductCache cache({ideal});
  auto hilbert_value = [&](long long n) { return cache.colength_at({n}); };
  auto fiber_value = [&](long long n) { return cache.min_gens_at({n}); };

  IdealInvariants out;
  out.dim = d;
  out.colength = ideal.colength();
  out.min_gens = ideal.min_gens();

  auto hilbert = fit_with_retries(hilbert_value, d, options, Convention::hilbert_samuel, n_start);
  out.e = hilbert.poly.signed_coefficients();
  out.hilbert_fit = {hilbert.postulation, hilbert.poly.anchor() + d};

  auto fiber = fit_with_retries(fiber_value, d - 1, options, Convention::fiber, n_start);
  out.f = fiber.poly.signed_coefficients();
  out.fiber_fit = {fiber.postulation, fiber.poly.anchor() + d - 1};

  if (d == 2) {
    Int staircase = newton_multiplicity(ideal);
    if (staircase != out.e[0]) {
      throw Error(errc::oracle_mismatch,
                  "staircase multiplicity " + staircase.str() + " disagrees with fitted e0 " +
                      out.e[0].str() + " for " + ideal.to_string());
    }
  }
  return out;
}

ModuleInvariants module_invariants(const DirectSumModule& module, const FitOptions& options,
                                   ProductCache& cache) {
  const int d = module.dimension();
  const int r = module.rank();
  const long long n_start = options.n_max > 0 ? options.n_max : default_n_max(d, r);

  ModuleEvaluator eval(module, cache);
  auto bf = [&](long long n) { return eval.bf(n); };
  auto fiber = [&](long long n) { return eval.fiber(n); };

  ModuleInvariants out;
  out.dim = d;
  out.rank = r;
  out.len_f_mod_m = module.len_f_mod_m();
  out.min_gens = module.min_gens_total();

  auto bf_fit = fit_with_retries(bf, d + r - 1, options, Convention::buchsbaum_rim, n_start);
  out.br = bf_fit.poly.signed_coefficients();
  out.bf_fit = {bf_fit.postulation, bf_fit.poly.anchor() + d + r - 1};

  auto fiber_fit = fit_with_retries(fiber, d + r - 2, options, Convention::fiber, n_start);
  out.f = fiber_fit.poly.signed_coefficients();
  out.fiber_fit = {fiber_fit.postulation, fiber_fit.poly.anchor() + d + r - 2};

  return out;
}

ModuleInvariants module_invariants(const DirectSumModule& module, const FitOptions& options) {
  ProductCache cache(module.distinct());
  return module_invariants(module, options, cache);
}

bool is_reduction(const Ideal& J, const Ideal& I, long long s_max) {
  if (!I.contains(J)) {
    throw Error(errc::not_contained, "is_reduction needs J inside I");
  }
  if (J.equals(I)) return true;
  auto hint_I = multiplicity_hint(I);
  auto hint_J = multiplicity_hint(J);
  if (hint_I && hint_J && *hint_I != *hint_J) return false;
  Ideal i_power = I.power(0);  // I^s
  Ideal i_next = I;            // I^{s+1}
  for (long long s = 0; s <= s_max; ++s) {
    if (J.product(i_power).equals(i_next)) return true;
    i_power = i_next;
    i_next = i_next.product(I);
  }
  return false;
}

long long reduction_number(const Ideal& I, const Ideal& J, long long s_max) {
  if (!I.contains(J)) {
    throw Error(errc::not_contained, "reduction_number needs J inside I");
  }
  Ideal i_power = I.power(0);  // I^s
  Ideal i_next = I;            // I^{s+1}
  for (long long s = 0; s <= s_max; ++s) {
    if (J.product(i_power).equals(i_next)) return s;
    i_power = i_next;
    i_next = i_next.product(I);
  }
  throw Error(errc::not_a_reduction,
              "J I^s never reaches I^(s+1) for s up to " + std::to_string(s_max));
}

Int sally_length(const Ideal& I, const Ideal& J, long long n) {
  if (n < 0) throw Error(errc::invalid_ideal, "sally_length needs n >= 0");
  Int outer = I.product(J.power(n)).colength();
  Int inner = I.power(n + 1).colength();
  return outer - inner;
}

SallyPolynomial sally_polynomial(const ModuleInvariants& invariants) {
  if (invariants.dim != 2) {
    throw Error(errc::unsupported, "the Sally polynomial closed form needs dimension 2");
  }
  const int r = invariants.rank;
  // br has d + r = r + 2 entries; the closed form uses br_0..br_{r+1}.
  std::vector<Int> coeffs;
  coeffs.reserve(static_cast<size_t>(r) + 1);
  coeffs.push_back(invariants.br[1] - invariants.br[0] + invariants.len_f_mod_m);
  for (int j = 2; j <= r + 1; ++j) coeffs.push_back(invariants.br[static_cast<size_t>(j)]);

  SallyPolynomial out{BinomialPolynomial::from_signed(Convention::buchsbaum_rim, coeffs),
                      coeffs.front(), coeffs.front() < 0};
  return out;
}

}  // namespace brim
