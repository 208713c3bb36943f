#include "brim/checks.hpp"

#include <doctest.h>

#include <vector>

using brim::CheckOptions;
using brim::CheckReport;
using brim::DirectSumModule;
using brim::Ideal;
using brim::Int;
using brim::MonomialIdeal;
using brim::MonomialRing;
using brim::NumericalSemigroup;
using brim::SemigroupIdeal;
using brim::Verdict;

namespace {

const auto kXY = MonomialRing::make({"x", "y"});
const auto kXYZ = MonomialRing::make({"x", "y", "z"});
const auto kS = NumericalSemigroup::make({7, 15, 17, 33});

Ideal mono(std::vector<brim::Exponents> gens) {
  return Ideal(MonomialIdeal::make(kXY, std::move(gens)));
}

Ideal mono3(std::vector<brim::Exponents> gens) {
  return Ideal(MonomialIdeal::make(kXYZ, std::move(gens)));
}

Ideal semi(std::vector<long long> exps) { return Ideal(SemigroupIdeal::make(kS, std::move(exps))); }

Int witness_int(const brim::Json& value) {
  if (value.is_string()) return Int(value.get<std::string>());
  return Int(value.get<long long>());
}

}  // namespace

TEST_CASE("vasconcelos bound fails on the dimension one running example") {
  const auto I = semi({7, 17, 33});
  const auto M = DirectSumModule::make({I, I});
  const auto report = brim::check_vasconcelos(M);
  CHECK(report.check_name == "vasconcelos");
  CHECK(report.verdict == Verdict::violated);
  CHECK(report.lhs == 4);
  CHECK(report.rhs == 2);
  CHECK(report.slack == -2);
  CHECK_FALSE(report.fit_failed);
  CHECK(report.witness.contains("note"));
  CHECK(report.witness.contains("module"));
  CHECK(report.witness["module"]["br"] == brim::json_int_list({14, 5, -5}));
}

TEST_CASE("vasconcelos bound is an equality for small reduction numbers") {
  const auto m = mono({{1, 0}, {0, 1}});
  const auto report = brim::check_vasconcelos(DirectSumModule::make({m, m}));
  CHECK(report.verdict == Verdict::equality);
  CHECK(report.lhs == 2);
  CHECK(report.rhs == 2);
  CHECK(report.slack == 0);

  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto strict = brim::check_vasconcelos(DirectSumModule::make({sq, sq, sq}));
  CHECK((strict.verdict == Verdict::holds || strict.verdict == Verdict::equality));
  CHECK(strict.lhs <= strict.rhs);
}

TEST_CASE("northcott equality in dimension two") {
  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto report = brim::check_northcott_equality(DirectSumModule::make({sq, sq}));
  CHECK(report.verdict == Verdict::equality);
  CHECK(report.lhs == 6);
  CHECK(report.rhs == 6);

  const auto wrong_dim = brim::check_northcott_equality(
      DirectSumModule::make({semi({7, 17, 33})}));
  CHECK(wrong_dim.verdict == Verdict::inapplicable);
  CHECK_FALSE(wrong_dim.fit_failed);
}

TEST_CASE("cm fiber criterion certifies both running examples") {
  const auto d2 = brim::check_cm_fiber_ideal(mono({{2, 0}, {1, 1}, {0, 2}}),
                                             mono({{2, 0}, {0, 2}}));
  CHECK(d2.verdict == Verdict::equality);
  CHECK(d2.lhs == 2);
  CHECK(d2.rhs == 2);
  CHECK(d2.witness["cm"] == true);
  CHECK(d2.witness["numerator_matches_terms"] == true);
  CHECK(d2.witness["reduction_number"] == 1);

  const auto d1 = brim::check_cm_fiber_ideal(semi({7, 17, 33}), semi({7}));
  CHECK(d1.verdict == Verdict::equality);
  CHECK(d1.lhs == 4);
  CHECK(d1.rhs == 4);
  CHECK(d1.witness["reduction_number"] == 2);
  // Terms (1, 2, 1): one unit, mu jump 2 at the first power, 1 at the second.
  CHECK(d1.witness["terms"] == brim::json_int_list({1, 2, 1}));
}

TEST_CASE("cm fiber criterion gates on the reduction hypothesis") {
  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto not_reduction = brim::check_cm_fiber_ideal(sq, mono({{3, 0}, {0, 3}}));
  CHECK(not_reduction.verdict == Verdict::inapplicable);
  CHECK(not_reduction.witness["is_reduction"] == false);

  const auto not_contained = brim::check_cm_fiber_ideal(mono({{2, 0}, {0, 2}}), sq);
  CHECK(not_contained.verdict == Verdict::inapplicable);
  CHECK(not_contained.witness["is_reduction"] == false);
}

TEST_CASE("reduction number bound in dimension two") {
  const auto report = brim::check_reduction_bound(mono({{2, 0}, {1, 1}, {0, 2}}),
                                                  mono({{2, 0}, {0, 2}}));
  CHECK(report.verdict == Verdict::equality);
  CHECK(report.lhs == 1);
  CHECK(report.rhs == 1);
  CHECK(report.witness["cm"] == true);
  CHECK(witness_int(report.witness["rhs_cm_bound"]) == 1);
  CHECK(witness_int(report.witness["rhs_chern_bound"]) == 1);
}

TEST_CASE("reduction number bound outside dimension two still reports the cm bound") {
  const auto report = brim::check_reduction_bound(semi({7, 17, 33}), semi({7}));
  CHECK(report.verdict == Verdict::inapplicable);
  CHECK(witness_int(report.witness["rhs_cm_bound"]) == 2);
  CHECK(report.witness["cm_bound_holds"] == true);
  CHECK(report.witness["reduction_number"] == 2);
}

TEST_CASE("sum formulas for repeated summands") {
  const auto d1 = brim::check_sum_formulas(semi({7, 17, 33}), 2);
  CHECK(d1.verdict == Verdict::equality);
  CHECK(d1.slack == 0);
  const auto& formulas = d1.witness["formulas"];
  CHECK(formulas["br0"]["closed"] == formulas["br0"]["fitted"]);
  CHECK(witness_int(formulas["br0"]["closed"]) == 14);
  CHECK(witness_int(formulas["br1"]["closed"]) == 5);

  const auto d2 = brim::check_sum_formulas(mono({{2, 0}, {0, 2}}), 2);
  CHECK(d2.verdict == Verdict::equality);
  CHECK(witness_int(d2.witness["formulas"]["br0"]["closed"]) == 12);
  CHECK(witness_int(d2.witness["formulas"]["br1"]["closed"]) == 4);
  CHECK(witness_int(d2.witness["formulas"]["f0"]["closed"]) == 2);

  const auto d3 = brim::check_sum_formulas(mono3({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), 3);
  CHECK(d3.verdict == Verdict::equality);
}

TEST_CASE("mixed sum transfer for a genuine reduction pair") {
  const auto report = brim::check_mixed_sum(mono({{2, 0}, {1, 1}, {0, 2}}),
                                            mono({{2, 0}, {0, 2}}), 1, 1);
  CHECK(report.verdict == Verdict::equality);
  CHECK(witness_int(report.witness["transfer_deviation"]) == 0);
  CHECK(witness_int(report.witness["lambda"]) == 0);
  CHECK(report.witness["gap_identity_ok"] == true);
  CHECK(report.witness["parameter_ideal"] == false);
}

TEST_CASE("mixed sum parameter cases by dimension and rank") {
  // d = 2, r = 2: parameter ideals give a vanishing gap.
  const auto flat = brim::check_mixed_sum(mono({{1, 0}, {0, 1}}), mono({{1, 0}, {0, 1}}), 1, 1);
  CHECK(flat.verdict == Verdict::equality);
  CHECK(flat.witness["parameter_ideal"] == true);
  CHECK(flat.witness["parameter_cases"]["ok"] == true);

  // d = 3, r = 3, e0 = 2: the pure-sum gap is (d-1)(d-2)/2 (e0-1) = 1.
  const auto bumped = brim::check_mixed_sum(mono3({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                            mono3({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2, 1);
  CHECK(bumped.verdict == Verdict::holds);
  CHECK(witness_int(bumped.witness["lambda_pure"]) == 1);
  CHECK(bumped.witness["parameter_cases"]["ok"] == true);
  CHECK(bumped.slack == 1);

  // d = 3, r = 4: the gap is positive even for the maximal ideal.
  const auto top = brim::check_mixed_sum(mono3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                         mono3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2, 2);
  CHECK(top.verdict == Verdict::holds);
  CHECK(witness_int(top.witness["lambda"]) == 1);

  // d = 3, r = 3, e0 = 1: the gap collapses to zero.
  const auto unit_mult = brim::check_mixed_sum(mono3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                               mono3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2, 1);
  CHECK(unit_mult.verdict == Verdict::equality);
  CHECK(unit_mult.witness["parameter_cases"]["ok"] == true);
}

TEST_CASE("mixed sum validates its inputs") {
  const auto I = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto J = mono({{2, 0}, {0, 2}});
  CHECK_THROWS_AS(brim::check_mixed_sum(I, J, 0, 1), brim::Error);
  const auto d1 = brim::check_mixed_sum(semi({7, 17, 33}), semi({7}), 1, 1);
  CHECK(d1.verdict == Verdict::inapplicable);
}

TEST_CASE("power decomposition identity over a window") {
  const auto m = mono({{1, 0}, {0, 1}});
  const auto equal_pair = brim::check_prop_decomposition(m, m);
  CHECK(equal_pair.verdict == Verdict::holds);
  CHECK(equal_pair.witness["ideals_equal"] == true);
  CHECK(equal_pair.lhs == equal_pair.rhs);

  const auto pair = brim::check_prop_decomposition(mono({{2, 0}, {1, 1}, {0, 2}}),
                                                   mono({{2, 0}, {0, 2}}));
  CHECK(pair.verdict == Verdict::holds);
  CHECK(pair.witness["ideals_equal"] == false);
  CHECK(pair.slack == 0);

  const auto gated = brim::check_prop_decomposition(mono({{2, 0}, {1, 1}, {0, 2}}),
                                                    mono({{3, 0}, {0, 3}}));
  CHECK(gated.verdict == Verdict::inapplicable);
  const auto d1 = brim::check_prop_decomposition(semi({7, 17, 33}), semi({7}));
  CHECK(d1.verdict == Verdict::inapplicable);
}

TEST_CASE("fit failure is reported, not thrown") {
  CheckOptions tight;
  tight.fit.n_max = 2;
  tight.fit.n_ceiling = 2;
  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto report = brim::check_vasconcelos(DirectSumModule::make({sq, sq}), tight);
  CHECK(report.verdict == Verdict::inapplicable);
  CHECK(report.fit_failed);
  CHECK(report.witness.contains("reason"));
}

TEST_CASE("report serialization has a fixed field order") {
  const auto report = brim::check_northcott_equality(
      DirectSumModule::make({mono({{1, 0}, {0, 1}})}));
  const auto json = brim::to_json(report);
  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"check_name", "inputs", "lhs", "rhs", "slack", "verdict",
                                         "witness", "fit_failed"});
  CHECK(json["verdict"] == "EQUALITY");
  CHECK(json["witness"].contains("note"));
}

TEST_CASE("ring mismatch between check inputs throws") {
  CHECK_THROWS_AS(brim::check_cm_fiber_ideal(mono({{1, 0}, {0, 1}}),
                                             mono3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                  brim::Error);
}
