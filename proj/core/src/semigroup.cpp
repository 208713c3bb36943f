#include "brim/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brim {

namespace {

constexpr long long kTableCap = 100'000'000;

}  // namespace

std::shared_ptr<const NumericalSemigroup> NumericalSemigroup::make(
    std::vector<long long> generators) {
  if (generators.empty()) throw Error(errc::invalid_ring, "semigroup needs generators");
  for (long long g : generators) {
    if (g <= 0) throw Error(errc::invalid_ring, "semigroup generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  long long g = 0;
  for (long long v : generators) g = std::gcd(g, v);
  if (g != 1) throw Error(errc::invalid_ring, "semigroup generators must have gcd 1");

  // Grow the membership table until the first g_min consecutive members
  // appear; from there on every integer is a member.
  const long long step = generators.front();
  long long bound = 4 * generators.back() + 4;
  std::vector<uint8_t> table;
  long long frontier = -1;  // start of the first run of step consecutive members
  while (true) {
    if (bound > kTableCap) {
      throw Error(errc::resource_limit, "semigroup membership table exceeds the cap");
    }
    table.assign(static_cast<size_t>(bound), 0);
    table[0] = 1;
    for (long long x = 1; x < bound; ++x) {
      for (long long gen : generators) {
        if (x >= gen && table[static_cast<size_t>(x - gen)]) {
          table[static_cast<size_t>(x)] = 1;
          break;
        }
      }
    }
    long long run = 0;
    frontier = -1;
    for (long long x = 0; x < bound; ++x) {
      run = table[static_cast<size_t>(x)] ? run + 1 : 0;
      if (run == step) {
        frontier = x - step + 1;
        break;
      }
    }
    if (frontier >= 0) break;
    bound *= 2;
  }
  const long long frobenius = frontier - 1;  // -1 when members start at 0 with no gaps
  table.resize(static_cast<size_t>(frobenius + 1));
  return std::shared_ptr<const NumericalSemigroup>(
      new NumericalSemigroup(std::move(generators), frobenius, std::move(table)));
}

bool NumericalSemigroup::is_member(long long x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return member_[static_cast<size_t>(x)] != 0;
}

namespace {

// Irredundant representatives: drop e when e - e' lies in S for a smaller
// kept e'. One ascending pass suffices.
std::vector<long long> reduce_exponents(const NumericalSemigroup& ring,
                                        std::vector<long long> exponents) {
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<long long> kept;
  for (long long e : exponents) {
    bool redundant = false;
    for (long long k : kept) {
      if (ring.is_member(e - k)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(e);
  }
  return kept;
}

void require_same_ring(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (!(*a.ring() == *b.ring())) {
    throw Error(errc::ring_mismatch, "ideals live in different semigroup rings");
  }
}

}  // namespace

SemigroupIdeal SemigroupIdeal::make(std::shared_ptr<const NumericalSemigroup> ring,
                                    std::vector<long long> exponents) {
  if (!ring) throw Error(errc::invalid_ring, "null ring");
  if (exponents.empty()) throw Error(errc::invalid_ideal, "zero ideal is not representable");
  for (long long e : exponents) {
    if (e < 0 || !ring->is_member(e)) {
      throw Error(errc::invalid_ideal,
                  "exponent " + std::to_string(e) + " is not a member of the semigroup");
    }
  }
  auto reduced = reduce_exponents(*ring, std::move(exponents));
  return SemigroupIdeal(std::move(ring), std::move(reduced));
}

SemigroupIdeal SemigroupIdeal::unit(std::shared_ptr<const NumericalSemigroup> ring) {
  return SemigroupIdeal(std::move(ring), {0});
}

SemigroupIdeal SemigroupIdeal::maximal(std::shared_ptr<const NumericalSemigroup> ring) {
  auto gens = ring->generators();
  return make(std::move(ring), std::move(gens));
}

std::string SemigroupIdeal::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out << ", ";
    if (exponents_[i] == 0) {
      out << "1";
    } else {
      out << "t^" << exponents_[i];
    }
  }
  out << ")";
  return out.str();
}

SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_ring(a, b);
  std::vector<long long> sums;
  sums.reserve(a.exponents().size() * b.exponents().size());
  for (long long ea : a.exponents()) {
    for (long long eb : b.exponents()) sums.push_back(ea + eb);
  }
  return SemigroupIdeal::make(a.ring(), std::move(sums));
}

SemigroupIdeal power(const SemigroupIdeal& a, long long n) {
  if (n < 0) throw Error(errc::invalid_ideal, "negative power");
  if (n == 0) return SemigroupIdeal::unit(a.ring());
  SemigroupIdeal result = a;
  for (long long i = 1; i < n; ++i) result = product(result, a);
  return result;
}

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_ring(a, b);
  std::vector<long long> exps = a.exponents();
  exps.insert(exps.end(), b.exponents().begin(), b.exponents().end());
  return SemigroupIdeal::make(a.ring(), std::move(exps));
}

namespace {

bool ideal_member(const SemigroupIdeal& a, long long x) {
  for (long long e : a.exponents()) {
    if (a.ring()->is_member(x - e)) return true;
  }
  return false;
}

}  // namespace

bool contains(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_ring(a, b);
  for (long long e : b.exponents()) {
    if (!ideal_member(a, e)) return false;
  }
  return true;
}

bool equals(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_ring(a, b);
  return a.exponents() == b.exponents();
}

Int colength_bounded(const SemigroupIdeal& a, long long bound) {
  if (bound > kTableCap) {
    throw Error(errc::resource_limit, "semigroup colength bound exceeds the cap");
  }
  Int count = 0;
  for (long long s = 0; s < bound; ++s) {
    if (!a.ring()->is_member(s)) continue;
    if (!ideal_member(a, s)) ++count;
  }
  return count;
}

Int colength(const SemigroupIdeal& a) {
  if (a.is_unit()) return 0;
  const long long max_exp = *std::max_element(a.exponents().begin(), a.exponents().end());
  return colength_bounded(a, a.ring()->frobenius_bound() + max_exp);
}

Int min_gens(const SemigroupIdeal& a) {
  if (a.is_unit()) {
    throw Error(errc::invalid_ideal, "min_gens requires a proper nonzero ideal");
  }
  return Int(a.exponents().size());
}

}  // namespace brim
