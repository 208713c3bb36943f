#include "brim/monomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using brim::Exponents;
using brim::Int;
using brim::MonomialIdeal;
using brim::MonomialRing;

namespace {

const auto kXY = MonomialRing::make({"x", "y"});
const auto kXYZ = MonomialRing::make({"x", "y", "z"});

bool dominates(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Brute-force membership: a monomial lies in the ideal iff it dominates
// some generator. Generators may be any set, not only the antichain.
bool member(const std::vector<Exponents>& gens, const Exponents& v) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Exponents& g) { return dominates(v, g); });
}

// Brute-force colength: scan the whole box up to `box` in every coordinate.
Int brute_colength(const std::vector<Exponents>& gens, long long box, int dim) {
  Int count = 0;
  Exponents v(dim, 0);
  while (true) {
    if (!member(gens, v)) ++count;
    int i = dim - 1;
    while (i >= 0 && v[i] == box - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return count;
}

std::vector<Exponents> random_gens(std::mt19937& rng, int dim, long long cap, bool primary) {
  std::uniform_int_distribution<long long> exp(0, cap);
  std::uniform_int_distribution<int> extra_count(0, 4);
  std::vector<Exponents> gens;
  if (primary) {
    for (int i = 0; i < dim; ++i) {
      Exponents pure(dim, 0);
      pure[i] = 1 + exp(rng) % cap;
      gens.push_back(pure);
    }
  }
  for (int k = extra_count(rng); k > 0; --k) {
    Exponents e(dim);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) nonzero = nonzero || (e[i] = exp(rng)) > 0;
    if (nonzero) gens.push_back(e);
  }
  if (gens.empty()) {
    Exponents e(dim, 0);
    e[0] = 1;
    gens.push_back(e);
  }
  return gens;
}

}  // namespace

TEST_CASE("ring construction validates variables") {
  CHECK_THROWS_AS(MonomialRing::make({}), brim::Error);
  CHECK_THROWS_AS(MonomialRing::make({"x"}), brim::Error);
  CHECK_THROWS_AS(MonomialRing::make({"x", "x"}), brim::Error);
  CHECK_THROWS_AS(MonomialRing::make({"x", ""}), brim::Error);
  CHECK(kXYZ->dimension() == 3);
}

TEST_CASE("minimalize keeps exactly the undominated generators") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> exp(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Exponents> gens;
    const int n = 1 + trial % 7;
    for (int k = 0; k < n; ++k) gens.push_back({exp(rng), exp(rng)});
    const auto minimal = brim::minimalize(gens);

    // Oracle: quadratic scan for strict domination by a distinct element.
    std::set<Exponents> expected;
    for (const auto& g : gens) {
      bool dominated = false;
      for (const auto& h : gens)
        if (h != g && dominates(g, h)) dominated = true;
      if (!dominated) expected.insert(g);
    }
    // Equal duplicates collapse to one copy.
    CHECK(std::set<Exponents>(minimal.begin(), minimal.end()) == expected);
    CHECK(std::is_sorted(minimal.begin(), minimal.end()));
    CHECK(std::adjacent_find(minimal.begin(), minimal.end()) == minimal.end());
  }
}

TEST_CASE("ideal construction rejects bad generator data") {
  CHECK_THROWS_AS(MonomialIdeal::make(kXY, {}), brim::Error);
  CHECK_THROWS_AS(MonomialIdeal::make(kXY, {{1}}), brim::Error);
  CHECK_THROWS_AS(MonomialIdeal::make(kXY, {{1, -2}}), brim::Error);
}

TEST_CASE("primality detection needs a pure power in every variable") {
  CHECK(MonomialIdeal::make(kXY, {{2, 0}, {0, 3}}).is_m_primary());
  CHECK(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}, {0, 2}}).is_m_primary());
  CHECK_FALSE(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}}).is_m_primary());
  CHECK_FALSE(MonomialIdeal::unit(kXY).is_m_primary());
  CHECK(MonomialIdeal::maximal(kXYZ).is_m_primary());
}

TEST_CASE("colength matches hand values") {
  CHECK(brim::colength(MonomialIdeal::maximal(kXY)) == 1);
  CHECK(brim::colength(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}, {0, 2}})) == 3);
  CHECK(brim::colength(MonomialIdeal::make(kXY, {{2, 0}, {0, 2}})) == 4);
  CHECK(brim::colength(MonomialIdeal::make(kXY, {{3, 0}, {1, 1}, {0, 2}})) == 4);
  CHECK(brim::colength(MonomialIdeal::unit(kXY)) == 0);
  CHECK(brim::colength(MonomialIdeal::maximal(kXYZ)) == 1);
}

TEST_CASE("colength matches the brute-force box scan") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 3;
    const auto gens = random_gens(rng, dim, 6, true);
    const auto ideal = MonomialIdeal::make(dim == 2 ? kXY : kXYZ, gens);
    CHECK(brim::colength(ideal) == brute_colength(gens, 8, dim));
  }
}

TEST_CASE("colength error taxonomy") {
  CHECK_THROWS_AS(brim::colength(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}})), brim::Error);
  const auto huge = MonomialIdeal::make(kXY, {{200000, 0}, {0, 200000}});
  CHECK_THROWS_AS(brim::colength(huge), brim::Error);
  try {
    brim::colength(huge);
  } catch (const brim::Error& e) {
    CHECK(e.code() == brim::errc::resource_limit);
  }
  try {
    brim::colength(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}}));
  } catch (const brim::Error& e) {
    CHECK(e.code() == brim::errc::infinite_colength);
  }
}

TEST_CASE("product, power, and sum agree with brute-force membership counting") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 3;
    const auto ring = dim == 2 ? kXY : kXYZ;
    const auto a_gens = random_gens(rng, dim, 3, true);
    const auto b_gens = random_gens(rng, dim, 3, true);
    const auto a = MonomialIdeal::make(ring, a_gens);
    const auto b = MonomialIdeal::make(ring, b_gens);

    // Oracle generators without any minimalization.
    std::vector<Exponents> product_gens;
    for (const auto& g : a_gens)
      for (const auto& h : b_gens) {
        Exponents s(dim);
        for (int i = 0; i < dim; ++i) s[i] = g[i] + h[i];
        product_gens.push_back(s);
      }
    std::vector<Exponents> sum_gens = a_gens;
    sum_gens.insert(sum_gens.end(), b_gens.begin(), b_gens.end());

    CHECK(brim::colength(brim::product(a, b)) == brute_colength(product_gens, 10, dim));
    CHECK(brim::colength(brim::sum(a, b)) == brute_colength(sum_gens, 8, dim));
  }
}

TEST_CASE("power is the iterated product") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto gens = random_gens(rng, 2, 4, true);
    const auto a = MonomialIdeal::make(kXY, gens);
    CHECK(brim::equals(brim::power(a, 0), MonomialIdeal::unit(kXY)));
    CHECK(brim::equals(brim::power(a, 1), a));
    auto iterated = a;
    for (int n = 2; n <= 4; ++n) {
      iterated = brim::product(iterated, a);
      CHECK(brim::equals(brim::power(a, n), iterated));
    }
  }
}

TEST_CASE("containment agrees with generator membership") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a_gens = random_gens(rng, 2, 4, trial % 3 != 0);
    const auto b_gens = random_gens(rng, 2, 4, trial % 4 != 0);
    const auto a = MonomialIdeal::make(kXY, a_gens);
    const auto b = MonomialIdeal::make(kXY, b_gens);
    const bool expected = std::all_of(b_gens.begin(), b_gens.end(),
                                      [&](const Exponents& g) { return member(a_gens, g); });
    CHECK(brim::contains(a, b) == expected);
    CHECK(brim::contains(a, brim::product(a, b)));
    CHECK(brim::contains(brim::sum(a, b), a));
  }
}

TEST_CASE("construction canonicalizes generator order and redundancy") {
  const auto a = MonomialIdeal::make(kXY, {{0, 2}, {2, 0}, {1, 1}, {2, 2}, {1, 1}});
  const auto b = MonomialIdeal::make(kXY, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(brim::equals(a, b));
  CHECK(a.generators() == b.generators());
  CHECK(a.to_string() == "(y^2, x*y, x^2)");
  CHECK(brim::min_gens(a) == 3);
  CHECK(MonomialIdeal::unit(kXY).to_string() == "(1)");
  CHECK_THROWS_AS(brim::min_gens(MonomialIdeal::unit(kXY)), brim::Error);
}

TEST_CASE("newton multiplicity equals the asymptotic second difference of colengths") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const auto gens = random_gens(rng, 2, 4, true);
    const auto a = MonomialIdeal::make(kXY, gens);
    // Independent route: colength(a^n) is eventually a degree 2 polynomial
    // with leading term e0 n^2 / 2, so its second difference stabilizes at e0.
    std::vector<Int> values;
    for (long long n = 7; n <= 10; ++n) values.push_back(brim::colength(brim::power(a, n)));
    const Int d2_a = values[2] - 2 * values[1] + values[0];
    const Int d2_b = values[3] - 2 * values[2] + values[1];
    CHECK(d2_a == d2_b);
    CHECK(brim::newton_multiplicity(a) == d2_a);
  }
}

TEST_CASE("newton multiplicity closed forms") {
  CHECK(brim::newton_multiplicity(MonomialIdeal::make(kXY, {{3, 0}, {0, 5}})) == 15);
  CHECK(brim::newton_multiplicity(MonomialIdeal::make(kXY, {{2, 0}, {1, 1}, {0, 2}})) == 4);
  CHECK(brim::newton_multiplicity(MonomialIdeal::maximal(kXY)) == 1);
  // Interior generators above the hull do not change the multiplicity.
  CHECK(brim::newton_multiplicity(MonomialIdeal::make(kXY, {{3, 0}, {0, 3}, {2, 2}})) == 9);
  CHECK_THROWS_AS(brim::newton_multiplicity(MonomialIdeal::maximal(kXYZ)), brim::Error);
}
