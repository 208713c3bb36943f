#include "brim/invariants.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using brim::DirectSumModule;
using brim::Ideal;
using brim::Int;
using brim::MonomialIdeal;
using brim::MonomialRing;
using brim::NumericalSemigroup;
using brim::SemigroupIdeal;

namespace {

const auto kXY = MonomialRing::make({"x", "y"});
const auto kS = NumericalSemigroup::make({7, 15, 17, 33});

Ideal mono(std::vector<brim::Exponents> gens) {
  return Ideal(MonomialIdeal::make(kXY, std::move(gens)));
}

Ideal semi(std::vector<long long> exps) { return Ideal(SemigroupIdeal::make(kS, std::move(exps))); }

}  // namespace

TEST_CASE("semigroup ideal invariants at dimension one") {
  const auto I = semi({7, 17, 33});
  const auto inv = brim::ideal_invariants(I);
  CHECK(inv.dim == 1);
  CHECK(inv.e == std::vector<Int>{7, 5});
  CHECK(inv.f == std::vector<Int>{4});
  CHECK(inv.colength == 3);
  CHECK(inv.min_gens == 3);

  // Oracle for e: colength(I^n) = 7n - 5 for large n, checked pointwise.
  for (long long n = 4; n <= 8; ++n) CHECK(I.power(n).colength() == 7 * n - 5);
  // Oracle for f: mu(I^n) reaches the stable value 4.
  CHECK(I.power(5).min_gens() == 4);
}

TEST_CASE("module invariants for the direct sum of two copies") {
  const auto I = semi({7, 17, 33});
  const auto M = DirectSumModule::make({I, I});
  const auto inv = brim::module_invariants(M);
  CHECK(inv.dim == 1);
  CHECK(inv.rank == 2);
  CHECK(inv.br == std::vector<Int>{14, 5, -5});
  CHECK(inv.f == std::vector<Int>{4, 0});
  CHECK(inv.len_f_mod_m == 6);
  CHECK(inv.min_gens == 6);

  // Oracle: the fitted polynomial must reproduce the function values.
  const auto poly =
      brim::BinomialPolynomial::from_signed(brim::Convention::buchsbaum_rim, inv.br);
  for (long long n = inv.bf_fit.postulation; n <= 8; ++n)
    CHECK(poly.evaluate(n) == brim::bf_value(M, n));
  CHECK(brim::bf_value(M, 3) == 64);
}

TEST_CASE("maximal ideal invariants in dimension two") {
  const auto m = mono({{1, 0}, {0, 1}});
  const auto inv = brim::ideal_invariants(m);
  CHECK(inv.e == std::vector<Int>{1, 0, 0});
  CHECK(inv.f == std::vector<Int>{1, 0});
  CHECK(inv.colength == 1);
  CHECK(inv.min_gens == 2);

  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto inv2 = brim::ideal_invariants(sq);
  CHECK(inv2.e == std::vector<Int>{4, 1, 0});
  CHECK(inv2.f == std::vector<Int>{2, 1});
  CHECK(inv2.colength == 3);
  CHECK(inv2.min_gens == 3);
}

TEST_CASE("fitted multiplicity agrees with the staircase multiplicity") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<long long> exp(1, 4);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<brim::Exponents> gens = {{exp(rng), 0}, {0, exp(rng)}, {exp(rng), exp(rng)}};
    const auto I = mono(std::move(gens));
    const auto inv = brim::ideal_invariants(I);
    CHECK(inv.e[0] == brim::newton_multiplicity(I));
  }
}

TEST_CASE("fit window controls are honored") {
  CHECK(brim::default_n_max(1, 1) == 8);
  CHECK(brim::default_n_max(2, 2) == 16);
  const auto I = semi({7, 17, 33});
  brim::FitOptions tight;
  tight.n_max = 2;
  tight.n_ceiling = 2;
  CHECK_THROWS_AS(brim::ideal_invariants(I, tight), brim::Error);
  brim::FitOptions doubling;
  doubling.n_max = 2;
  doubling.n_ceiling = 64;
  const auto inv = brim::ideal_invariants(I, doubling);
  CHECK(inv.e == std::vector<Int>{7, 5});
}

TEST_CASE("reduction predicate and reduction number") {
  const auto I = semi({7, 17, 33});
  const auto J = semi({7});
  CHECK(brim::is_reduction(J, I));
  CHECK(brim::is_reduction(I, I));
  CHECK(brim::reduction_number(I, J) == 2);
  CHECK(brim::reduction_number(I, I) == 0);

  // Oracle for the reduction number, power by power.
  CHECK_FALSE(J.product(I.power(0)).equals(I.power(1)));
  CHECK_FALSE(J.product(I.power(1)).equals(I.power(2)));
  CHECK(J.product(I.power(2)).equals(I.power(3)));

  // (t^15) is not even contained in I.
  CHECK_THROWS_AS(brim::is_reduction(semi({15}), I), brim::Error);

  const auto m2 = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto param = mono({{2, 0}, {0, 2}});
  CHECK(brim::is_reduction(param, m2));
  CHECK(brim::reduction_number(m2, param) == 1);
  // Contained with matching colength growth but strictly smaller multiplicity.
  CHECK_FALSE(brim::is_reduction(mono({{3, 0}, {0, 3}}), m2));
}

TEST_CASE("sally lengths for the running dimension one example") {
  const auto I = semi({7, 17, 33});
  const auto J = semi({7});
  CHECK(brim::sally_length(I, J, 0) == 0);
  CHECK(brim::sally_length(I, J, 1) == 1);
  // I^3 = J I^2 makes every later piece I^{n+1}/J^n I a shifted copy of
  // I^2/JI, so the length stays 1.
  CHECK(brim::sally_length(I, J, 2) == 1);
  CHECK(brim::sally_length(I, J, 3) == 1);
  CHECK(J.product(I.power(2)).equals(I.power(3)));
  // Independent route: colength difference of the two ideals.
  CHECK(brim::sally_length(I, J, 1) == J.product(I).colength() - I.power(2).colength());
}

TEST_CASE("sally polynomial specializes to the ideal case") {
  // Rank 1: leading coefficient is e1 - e0 + colength.
  const auto sq = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto inv = brim::module_invariants(DirectSumModule::make({sq}));
  const auto sally = brim::sally_polynomial(inv);
  CHECK(sally.leading == inv.br[1] - inv.br[0] + inv.len_f_mod_m);
  CHECK(sally.leading == 0);  // reduction number 1 means a vanishing Sally module
  CHECK_FALSE(sally.northcott_violation);
  CHECK(sally.poly.degree() == 1);

  // A reduction number 2 ideal has a nonzero Sally module.
  const auto I = mono({{3, 0}, {1, 2}, {0, 3}});
  const auto inv2 = brim::module_invariants(DirectSumModule::make({I}));
  const auto sally2 = brim::sally_polynomial(inv2);
  CHECK(sally2.leading == inv2.br[1] - inv2.br[0] + inv2.len_f_mod_m);
  CHECK(sally2.leading > 0);
}

TEST_CASE("sally polynomial slope matches directly computed sally lengths") {
  // J = (x^3, y^3) is a minimal reduction of I = J + (x y^2); the degree n
  // piece of the Sally module eventually grows linearly with slope
  // e1 - e0 + colength(I).
  const auto J = mono({{3, 0}, {0, 3}});
  const auto I = mono({{3, 0}, {1, 2}, {0, 3}});
  REQUIRE(brim::is_reduction(J, I));
  const auto inv = brim::ideal_invariants(I);
  const Int slope = inv.e[1] - inv.e[0] + inv.colength;
  std::vector<Int> s;
  for (long long n = 0; n <= 10; ++n) s.push_back(brim::sally_length(I, J, n));
  for (size_t i = 6; i + 1 < s.size(); ++i) CHECK(s[i + 1] - s[i] == slope);
}

TEST_CASE("goto defect closes the multiplicity formula for minimal reductions") {
  const auto I = semi({7, 17, 33});
  const auto J = semi({7});
  CHECK(brim::goto_defect(I, J) == 2);
  CHECK(Int(7) == I.min_gens() + I.colength() - 1 + brim::goto_defect(I, J));

  const auto m2 = mono({{2, 0}, {1, 1}, {0, 2}});
  const auto param = mono({{2, 0}, {0, 2}});
  CHECK(brim::goto_defect(m2, param) == 0);
  const auto inv = brim::ideal_invariants(m2);
  CHECK(inv.e[0] == inv.min_gens + inv.colength - 2 + brim::goto_defect(m2, param));

  // Defect demands containment.
  CHECK_THROWS_AS(brim::goto_defect(param, m2), brim::Error);
}

TEST_CASE("multiplicity hints") {
  CHECK(brim::multiplicity_hint(semi({7, 17})) == Int(7));
  CHECK(brim::multiplicity_hint(mono({{2, 0}, {0, 3}})) == Int(6));
  const auto xyz = MonomialRing::make({"x", "y", "z"});
  CHECK_FALSE(brim::multiplicity_hint(Ideal(MonomialIdeal::maximal(xyz))).has_value());
}
