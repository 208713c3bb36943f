#pragma once

#include "brim/invariants.hpp"
#include "brim/json_util.hpp"

#include <string>

namespace brim {

enum class Verdict { holds, equality, violated, inapplicable };

const char* verdict_name(Verdict v);

// Outcome of one inequality or identity check. lhs/rhs are the two sides,
// slack is rhs - lhs for bounds and the total absolute deviation for
// identity checks, witness carries every intermediate invariant.
struct CheckReport {
  std::string check_name;
  std::string inputs;
  Int lhs = 0;
  Int rhs = 0;
  Int slack = 0;
  Verdict verdict = Verdict::inapplicable;
  Json witness = Json::object();
  // Set when the verdict is INAPPLICABLE because a fit did not stabilize;
  // the CLI maps this to its own exit code.
  bool fit_failed = false;
};

Json to_json(const CheckReport& report);

// Invariant bundles as JSON blocks, shared by check witnesses and the
// script runner's `compute invariants` output.
Json invariants_json(const IdealInvariants& inv);
Json invariants_json(const ModuleInvariants& inv);

struct CheckOptions {
  FitOptions fit;
  long long s_max = kDefaultSMax;
};

// f0(M) <= br1(M) - br0(M) + len(F/M) + mu(M) - (d + r - 2).
CheckReport check_vasconcelos(const DirectSumModule& module, const CheckOptions& options = {});

// br0(M) - br1(M) <= len(F/M), dimension 2, with equality the interesting case.
CheckReport check_northcott_equality(const DirectSumModule& module,
                                     const CheckOptions& options = {});

// Cohen-Macaulay fiber criterion for an ideal with reduction J: f0(I) equals
// the sum over i <= red_J(I) of length(I^i / (J I^{i-1} + m I^i)), and the
// truncated fiber Hilbert series numerator matches those terms.
CheckReport check_cm_fiber_ideal(const Ideal& I, const Ideal& J, const CheckOptions& options = {});

// red_J(I) <= f0 - mu + d + r - 1 and, in dimension 2, <= br1 - br0 + len + 1.
CheckReport check_reduction_bound(const Ideal& I, const Ideal& J,
                                  const CheckOptions& options = {});

// Closed formulas for M = I^r: br0, br1, f0, len(F/M), mu(M) against fits.
CheckReport check_sum_formulas(const Ideal& I, int rank, const CheckOptions& options = {});

// Transfer identities between I^u (+) J^v and I^(u+v) for a reduction J of I,
// the nonnegative gap Lambda, and the parameter-ideal equality cases.
CheckReport check_mixed_sum(const Ideal& I, const Ideal& J, int u, int v,
                            const CheckOptions& options = {});

// Informational identity sum_{i+j=n} mu(I^i J^j) = n mu(I^n) + mu(J^n) in
// dimension 2 for a reduction J of I.
CheckReport check_prop_decomposition(const Ideal& I, const Ideal& J,
                                     const CheckOptions& options = {});

}  // namespace brim
