#pragma once

#include "brim/errors.hpp"
#include "brim/int_math.hpp"

#include <memory>
#include <string>
#include <vector>

namespace brim {

// Numerical semigroup S = <g_1, ..., g_k> with gcd 1. Membership is decided
// by a bit table computed once up to the Frobenius number; everything above
// it is a member.
class NumericalSemigroup {
public:
  static std::shared_ptr<const NumericalSemigroup> make(std::vector<long long> generators);

  const std::vector<long long>& generators() const { return generators_; }
  bool is_member(long long x) const;
  // Largest gap plus one; 0 when there are no gaps.
  long long frobenius_bound() const { return frobenius_ + 1; }

  bool operator==(const NumericalSemigroup& other) const {
    return generators_ == other.generators_;
  }

private:
  NumericalSemigroup(std::vector<long long> generators, long long frobenius,
                     std::vector<uint8_t> table)
      : generators_(std::move(generators)), frobenius_(frobenius), member_(std::move(table)) {}

  std::vector<long long> generators_;
  long long frobenius_;          // -1 when S covers all of N
  std::vector<uint8_t> member_;  // indices 0..frobenius_
};

// Ideal of the semigroup ring k[[t^s : s in S]] generated by monomials
// t^e with e in S, held as its irredundant exponent set: no kept exponent
// is another kept exponent plus a semigroup member.
class SemigroupIdeal {
public:
  static SemigroupIdeal make(std::shared_ptr<const NumericalSemigroup> ring,
                             std::vector<long long> exponents);
  static SemigroupIdeal unit(std::shared_ptr<const NumericalSemigroup> ring);
  static SemigroupIdeal maximal(std::shared_ptr<const NumericalSemigroup> ring);

  const std::shared_ptr<const NumericalSemigroup>& ring() const { return ring_; }
  const std::vector<long long>& exponents() const { return exponents_; }

  bool is_unit() const { return exponents_.size() == 1 && exponents_[0] == 0; }
  bool is_proper() const { return !is_unit(); }
  // Every proper nonzero monomial ideal has finite colength in dimension 1.
  bool is_m_primary() const { return is_proper(); }

  std::string to_string() const;

private:
  SemigroupIdeal(std::shared_ptr<const NumericalSemigroup> ring, std::vector<long long> exponents)
      : ring_(std::move(ring)), exponents_(std::move(exponents)) {}

  std::shared_ptr<const NumericalSemigroup> ring_;
  std::vector<long long> exponents_;
};

SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal power(const SemigroupIdeal& a, long long n);
SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b);

bool contains(const SemigroupIdeal& a, const SemigroupIdeal& b);
bool equals(const SemigroupIdeal& a, const SemigroupIdeal& b);

// Count of semigroup members outside the ideal, enumerated up to
// frobenius_bound + max exponent; the count is stable in the bound.
Int colength(const SemigroupIdeal& a);
// Same count with an explicit enumeration bound, exposed for stability tests.
Int colength_bounded(const SemigroupIdeal& a, long long bound);

Int min_gens(const SemigroupIdeal& a);

}  // namespace brim
