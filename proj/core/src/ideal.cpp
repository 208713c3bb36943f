#include "brim/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace brim {

int Ring::dimension() const {
  if (is_semigroup()) return 1;
  return std::get<std::shared_ptr<const MonomialRing>>(v_)->dimension();
}

const std::shared_ptr<const MonomialRing>& Ring::monomial() const {
  if (is_semigroup()) throw Error(errc::ring_mismatch, "not a power series ring");
  return std::get<std::shared_ptr<const MonomialRing>>(v_);
}

const std::shared_ptr<const NumericalSemigroup>& Ring::semigroup_ring() const {
  if (!is_semigroup()) throw Error(errc::ring_mismatch, "not a semigroup ring");
  return std::get<std::shared_ptr<const NumericalSemigroup>>(v_);
}

Ideal Ring::maximal_ideal() const {
  if (is_semigroup()) return Ideal(SemigroupIdeal::maximal(semigroup_ring()));
  return Ideal(MonomialIdeal::maximal(monomial()));
}

std::string Ring::to_string() const {
  std::ostringstream out;
  if (is_semigroup()) {
    out << "semigroup(";
    const auto& gens = semigroup_ring()->generators();
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out << ", ";
      out << gens[i];
    }
    out << ")";
  } else {
    out << "power_series(";
    const auto& vars = monomial()->variables();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) out << ", ";
      out << vars[i];
    }
    out << ")";
  }
  return out.str();
}

bool Ring::operator==(const Ring& other) const {
  if (is_semigroup() != other.is_semigroup()) return false;
  if (is_semigroup()) return *semigroup_ring() == *other.semigroup_ring();
  return *monomial() == *other.monomial();
}

Ring Ideal::ring() const {
  if (is_semigroup_ideal()) return Ring(semigroup().ring());
  return Ring(monomial().ring());
}

int Ideal::dimension() const { return is_semigroup_ideal() ? 1 : monomial().dimension(); }

const MonomialIdeal& Ideal::monomial() const {
  if (is_semigroup_ideal()) throw Error(errc::ring_mismatch, "not a monomial ideal");
  return std::get<MonomialIdeal>(v_);
}

const SemigroupIdeal& Ideal::semigroup() const {
  if (!is_semigroup_ideal()) throw Error(errc::ring_mismatch, "not a semigroup ideal");
  return std::get<SemigroupIdeal>(v_);
}

namespace {

void require_same_backend(const Ideal& a, const Ideal& b) {
  if (a.is_semigroup_ideal() != b.is_semigroup_ideal()) {
    throw Error(errc::ring_mismatch, "ideals live in different rings");
  }
}

}  // namespace

Ideal Ideal::product(const Ideal& other) const {
  require_same_backend(*this, other);
  if (is_semigroup_ideal()) return Ideal(brim::product(semigroup(), other.semigroup()));
  return Ideal(brim::product(monomial(), other.monomial()));
}

Ideal Ideal::power(long long n) const {
  if (is_semigroup_ideal()) return Ideal(brim::power(semigroup(), n));
  return Ideal(brim::power(monomial(), n));
}

Ideal Ideal::sum(const Ideal& other) const {
  require_same_backend(*this, other);
  if (is_semigroup_ideal()) return Ideal(brim::sum(semigroup(), other.semigroup()));
  return Ideal(brim::sum(monomial(), other.monomial()));
}

Int Ideal::colength() const {
  if (is_semigroup_ideal()) return brim::colength(semigroup());
  return brim::colength(monomial());
}

Int Ideal::min_gens() const {
  if (is_semigroup_ideal()) return brim::min_gens(semigroup());
  return brim::min_gens(monomial());
}

bool Ideal::contains(const Ideal& other) const {
  require_same_backend(*this, other);
  if (is_semigroup_ideal()) return brim::contains(semigroup(), other.semigroup());
  return brim::contains(monomial(), other.monomial());
}

bool Ideal::equals(const Ideal& other) const {
  require_same_backend(*this, other);
  if (is_semigroup_ideal()) return brim::equals(semigroup(), other.semigroup());
  return brim::equals(monomial(), other.monomial());
}

bool Ideal::is_unit() const {
  return is_semigroup_ideal() ? semigroup().is_unit() : monomial().is_unit();
}

bool Ideal::is_proper() const { return !is_unit(); }

bool Ideal::is_m_primary() const {
  return is_semigroup_ideal() ? semigroup().is_m_primary() : monomial().is_m_primary();
}

std::string Ideal::to_string() const {
  return is_semigroup_ideal() ? semigroup().to_string() : monomial().to_string();
}

Int newton_multiplicity(const Ideal& a) {
  if (a.is_semigroup_ideal()) {
    throw Error(errc::unsupported, "newton_multiplicity is implemented for dimension 2 only");
  }
  return newton_multiplicity(a.monomial());
}

Int goto_defect(const Ideal& I, const Ideal& J) {
  if (!I.contains(J)) {
    throw Error(errc::not_contained, "goto_defect needs J inside I");
  }
  const Ideal m = I.ring().maximal_ideal();
  return m.product(J).colength() - m.product(I).colength();
}

std::optional<Int> multiplicity_hint(const Ideal& a) {
  if (a.dimension() == 1) {
    const auto& exps = a.semigroup().exponents();
    return Int(*std::min_element(exps.begin(), exps.end()));
  }
  if (a.dimension() == 2) return newton_multiplicity(a);
  return std::nullopt;
}

}  // namespace brim
