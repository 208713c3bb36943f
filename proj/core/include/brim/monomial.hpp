#pragma once

#include "brim/errors.hpp"
#include "brim/int_math.hpp"

#include <memory>
#include <string>
#include <vector>

namespace brim {

// Exponent vector of a monomial; length equals the ring dimension.
using Exponents = std::vector<long long>;

// Formal power series ring k[[x_1, ..., x_d]], d >= 2. Dimension one is
// served by the numerical semigroup backend.
class MonomialRing {
public:
  static std::shared_ptr<const MonomialRing> make(std::vector<std::string> variables);

  int dimension() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }

  bool operator==(const MonomialRing& other) const { return variables_ == other.variables_; }

private:
  explicit MonomialRing(std::vector<std::string> variables) : variables_(std::move(variables)) {}
  std::vector<std::string> variables_;
};

// Returns the minimal antichain under componentwise <= : duplicates and
// dominated vectors removed, sorted lexicographically.
std::vector<Exponents> minimalize(std::vector<Exponents> generators);

inline constexpr long long kDefaultVolumeCap = 100'000'000;

// Monomial ideal held as its unique minimal generating antichain.
class MonomialIdeal {
public:
  static MonomialIdeal make(std::shared_ptr<const MonomialRing> ring,
                            std::vector<Exponents> generators);
  static MonomialIdeal unit(std::shared_ptr<const MonomialRing> ring);
  static MonomialIdeal maximal(std::shared_ptr<const MonomialRing> ring);

  const std::shared_ptr<const MonomialRing>& ring() const { return ring_; }
  const std::vector<Exponents>& generators() const { return generators_; }
  int dimension() const { return ring_->dimension(); }

  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  // True iff every coordinate carries a pure power generator.
  bool is_m_primary() const;

  std::string to_string() const;

private:
  MonomialIdeal(std::shared_ptr<const MonomialRing> ring, std::vector<Exponents> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {}

  std::shared_ptr<const MonomialRing> ring_;
  std::vector<Exponents> generators_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// Iterated products with intermediate minimalization; power(a, 0) is the
// unit ideal.
MonomialIdeal power(const MonomialIdeal& a, long long n);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

// True iff b is contained in a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

// Number of standard monomials outside the ideal, counted over the bounding
// box cut out by the pure power generators. Throws InfiniteColength when the
// ideal is not m-primary and ResourceLimit when the box exceeds the cap.
Int colength(const MonomialIdeal& a, long long volume_cap = kDefaultVolumeCap);

// Size of the minimal antichain. Rejects the unit ideal.
Int min_gens(const MonomialIdeal& a);

// Twice the area between the staircase hull and the axes, dimension 2 only.
// Equals the Hilbert-Samuel multiplicity e0 for m-primary monomial ideals.
Int newton_multiplicity(const MonomialIdeal& a);

}  // namespace brim
