#pragma once

#include "brim/growth.hpp"
#include "brim/module.hpp"

#include <optional>

namespace brim {

// Window policy for the Hilbert function fits. n_max 0 means the default
// 4(d+r); on NotStabilized the window doubles up to the ceiling.
struct FitOptions {
  long long n_max = 0;
  int verify_window = 3;
  long long n_ceiling = 60;
};

long long default_n_max(int dim, int rank);

struct FitSummary {
  long long postulation = 0;
  long long window_hi = 0;
};

// Hilbert-Samuel coefficients e_0..e_d of colength(I^n), fiber coefficients
// f_0..f_{d-1} of mu(I^n), plus the degree 0 data.
struct IdealInvariants {
  int dim = 0;
  std::vector<Int> e;
  std::vector<Int> f;
  Int colength;
  Int min_gens;
  FitSummary hilbert_fit;
  FitSummary fiber_fit;
};

// Buchsbaum-Rim coefficients br_0..br_{d+r-1} of bf_value(M, n), fiber
// coefficients f_0..f_{d+r-2} of fiber_value(M, n), plus module degree 0 data.
struct ModuleInvariants {
  int dim = 0;
  int rank = 0;
  std::vector<Int> br;
  std::vector<Int> f;
  Int len_f_mod_m;
  Int min_gens;
  FitSummary bf_fit;
  FitSummary fiber_fit;
};

// In dimension 2 the fitted e_0 is cross-checked against the staircase
// multiplicity; disagreement is an internal fault, not an input error.
IdealInvariants ideal_invariants(const Ideal& ideal, const FitOptions& options = {});

ModuleInvariants module_invariants(const DirectSumModule& module, const FitOptions& options = {});
// Variant sharing a caller-owned cache across several modules over the same
// base ideals.
ModuleInvariants module_invariants(const DirectSumModule& module, const FitOptions& options,
                                   ProductCache& cache);

inline constexpr long long kDefaultSMax = 20;

// True iff J I^s = I^{s+1} for some s <= s_max. Requires J inside I. Uses
// equal cheap multiplicities as a necessary pre-filter where available.
bool is_reduction(const Ideal& J, const Ideal& I, long long s_max = kDefaultSMax);

// Least s with J I^s = I^{s+1}; throws NotAReduction if none up to s_max.
long long reduction_number(const Ideal& I, const Ideal& J, long long s_max = kDefaultSMax);

// length of I^{n+1} / I J^n = colength(I J^n) - colength(I^{n+1}), the
// degree n piece of the Sally module of J inside I. n >= 0.
Int sally_length(const Ideal& I, const Ideal& J, long long n);

// Closed form of the Sally-module Hilbert polynomial in dimension 2:
// value(n) = length of the degree n-1 piece for n >> 0. Coefficients are
// [br_1 - br_0 + len, br_2, ..., br_{r+1}] in the degree r signed basis.
struct SallyPolynomial {
  BinomialPolynomial poly;
  Int leading;
  // The leading coefficient is nonnegative when the Northcott-type bound
  // holds; a negative value is a counterexample candidate, not a crash.
  bool northcott_violation = false;
};

SallyPolynomial sally_polynomial(const ModuleInvariants& invariants);

}  // namespace brim
