#pragma once

#include "brim/monomial.hpp"
#include "brim/semigroup.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace brim {

class Ideal;

// Value handle over the two ring backends. Rings compare by content, so
// independently declared equal rings are compatible.
class Ring {
public:
  explicit Ring(std::shared_ptr<const MonomialRing> ring) : v_(std::move(ring)) {}
  explicit Ring(std::shared_ptr<const NumericalSemigroup> ring) : v_(std::move(ring)) {}

  static Ring power_series(std::vector<std::string> variables) {
    return Ring(MonomialRing::make(std::move(variables)));
  }
  static Ring semigroup(std::vector<long long> generators) {
    return Ring(NumericalSemigroup::make(std::move(generators)));
  }

  int dimension() const;
  bool is_semigroup() const { return std::holds_alternative<std::shared_ptr<const NumericalSemigroup>>(v_); }
  const std::shared_ptr<const MonomialRing>& monomial() const;
  const std::shared_ptr<const NumericalSemigroup>& semigroup_ring() const;

  Ideal maximal_ideal() const;
  std::string to_string() const;

  bool operator==(const Ring& other) const;

private:
  std::variant<std::shared_ptr<const MonomialRing>, std::shared_ptr<const NumericalSemigroup>> v_;
};

// Value handle over a monomial or semigroup ideal with the uniform
// operation set used by the growth and check layers.
class Ideal {
public:
  explicit Ideal(MonomialIdeal ideal) : v_(std::move(ideal)) {}
  explicit Ideal(SemigroupIdeal ideal) : v_(std::move(ideal)) {}

  Ring ring() const;
  int dimension() const;

  Ideal product(const Ideal& other) const;
  Ideal power(long long n) const;
  Ideal sum(const Ideal& other) const;

  Int colength() const;
  Int min_gens() const;

  bool contains(const Ideal& other) const;  // other subset of this
  bool equals(const Ideal& other) const;

  bool is_unit() const;
  bool is_proper() const;
  bool is_m_primary() const;

  const MonomialIdeal& monomial() const;
  const SemigroupIdeal& semigroup() const;
  bool is_semigroup_ideal() const { return std::holds_alternative<SemigroupIdeal>(v_); }

  std::string to_string() const;

private:
  std::variant<MonomialIdeal, SemigroupIdeal> v_;
};

// Staircase multiplicity, dimension 2 monomial ideals only.
Int newton_multiplicity(const Ideal& a);

// colength(m*J) - colength(m*I) for J inside I, the correction term of the
// multiplicity formula e0 = mu(I) + colength(I) - d + defect for minimal
// reductions J of I.
Int goto_defect(const Ideal& I, const Ideal& J);

// Cheap exact multiplicity used as a reduction pre-filter: minimal exponent
// in dimension 1, staircase multiplicity in dimension 2, absent otherwise.
std::optional<Int> multiplicity_hint(const Ideal& a);

}  // namespace brim
