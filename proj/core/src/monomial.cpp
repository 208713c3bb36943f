#include "brim/monomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace brim {

namespace {

bool dominates(const Exponents& a, const Exponents& b) {
  // a >= b componentwise
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const MonomialRing> MonomialRing::make(std::vector<std::string> variables) {
  if (variables.size() < 2) {
    throw Error(errc::invalid_ring,
                "power_series ring needs at least 2 variables; use semigroup(...) in dimension 1");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(errc::invalid_ring, "empty variable name");
    if (!seen.insert(v).second) {
      throw Error(errc::invalid_ring, "duplicate variable name '" + v + "'");
    }
  }
  return std::shared_ptr<const MonomialRing>(new MonomialRing(std::move(variables)));
}

std::vector<Exponents> minimalize(std::vector<Exponents> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Exponents> kept;
  kept.reserve(generators.size());
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators) {
      if (&h == &g) continue;
      if (h == g) continue;
      if (dominates(g, h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal MonomialIdeal::make(std::shared_ptr<const MonomialRing> ring,
                                  std::vector<Exponents> generators) {
  if (!ring) throw Error(errc::invalid_ring, "null ring");
  if (generators.empty()) {
    throw Error(errc::invalid_ideal, "zero ideal is not representable");
  }
  const size_t d = static_cast<size_t>(ring->dimension());
  for (const auto& g : generators) {
    if (g.size() != d) {
      throw Error(errc::invalid_ideal, "exponent vector length does not match ring dimension");
    }
    for (long long e : g) {
      if (e < 0) throw Error(errc::invalid_ideal, "negative exponent");
    }
  }
  return MonomialIdeal(std::move(ring), minimalize(std::move(generators)));
}

MonomialIdeal MonomialIdeal::unit(std::shared_ptr<const MonomialRing> ring) {
  Exponents zero(static_cast<size_t>(ring->dimension()), 0);
  return MonomialIdeal(std::move(ring), {zero});
}

MonomialIdeal MonomialIdeal::maximal(std::shared_ptr<const MonomialRing> ring) {
  const size_t d = static_cast<size_t>(ring->dimension());
  std::vector<Exponents> gens;
  for (size_t k = 0; k < d; ++k) {
    Exponents g(d, 0);
    g[k] = 1;
    gens.push_back(std::move(g));
  }
  return make(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 &&
         std::all_of(generators_[0].begin(), generators_[0].end(),
                     [](long long e) { return e == 0; });
}

bool MonomialIdeal::is_m_primary() const {
  if (is_unit()) return false;
  const size_t d = static_cast<size_t>(dimension());
  for (size_t k = 0; k < d; ++k) {
    bool pure = false;
    for (const auto& g : generators_) {
      if (g[k] == 0) continue;
      bool others_zero = true;
      for (size_t j = 0; j < d; ++j) {
        if (j != k && g[j] != 0) {
          others_zero = false;
          break;
        }
      }
      if (others_zero) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    const auto& g = generators_[i];
    bool wrote = false;
    for (size_t k = 0; k < g.size(); ++k) {
      if (g[k] == 0) continue;
      if (wrote) out << "*";
      out << ring_->variables()[k];
      if (g[k] > 1) out << "^" << g[k];
      wrote = true;
    }
    if (!wrote) out << "1";
  }
  out << ")";
  return out.str();
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(*a.ring() == *b.ring())) {
    throw Error(errc::ring_mismatch, "ideals live in different rings");
  }
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Exponents> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& ga : a.generators()) {
    for (const auto& gb : b.generators()) {
      Exponents s(ga.size());
      for (size_t k = 0; k < ga.size(); ++k) s[k] = ga[k] + gb[k];
      sums.push_back(std::move(s));
    }
  }
  return MonomialIdeal::make(a.ring(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& a, long long n) {
  if (n < 0) throw Error(errc::invalid_ideal, "negative power");
  if (n == 0) return MonomialIdeal::unit(a.ring());
  MonomialIdeal result = a;
  for (long long i = 1; i < n; ++i) result = product(result, a);
  return result;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Exponents> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::make(a.ring(), std::move(gens));
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  for (const auto& gb : b.generators()) {
    bool inside = false;
    for (const auto& ga : a.generators()) {
      if (dominates(gb, ga)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return a.generators() == b.generators();
}

Int colength(const MonomialIdeal& a, long long volume_cap) {
  if (a.is_unit()) return 0;
  if (!a.is_m_primary()) {
    throw Error(errc::infinite_colength, "colength of a non m-primary ideal " + a.to_string());
  }
  const size_t d = static_cast<size_t>(a.dimension());
  // Pure power exponents bound the box of standard monomials.
  std::vector<long long> box(d, 0);
  for (size_t k = 0; k < d; ++k) {
    for (const auto& g : a.generators()) {
      if (g[k] == 0) continue;
      bool others_zero = true;
      for (size_t j = 0; j < d; ++j) {
        if (j != k && g[j] != 0) {
          others_zero = false;
          break;
        }
      }
      if (others_zero && (box[k] == 0 || g[k] < box[k])) box[k] = g[k];
    }
  }
  Int volume = 1;
  for (size_t k = 0; k < d; ++k) volume *= box[k];
  if (volume > volume_cap) {
    throw Error(errc::resource_limit,
                "colength bounding box exceeds the volume cap (" + volume.str() + " points)");
  }

  // Walk the box of the first d-1 coordinates; for each prefix the points
  // outside the ideal are exactly those below the least admissible last
  // coordinate among prefix-dominated generators.
  Int total = 0;
  std::vector<long long> prefix(d - 1, 0);
  const auto& gens = a.generators();
  while (true) {
    long long min_last = box[d - 1];
    for (const auto& g : gens) {
      bool dom = true;
      for (size_t k = 0; k + 1 < d; ++k) {
        if (prefix[k] < g[k]) {
          dom = false;
          break;
        }
      }
      if (dom && g[d - 1] < min_last) min_last = g[d - 1];
    }
    total += min_last;
    size_t k = 0;
    while (k + 1 < d) {
      if (++prefix[k] < box[k]) break;
      prefix[k] = 0;
      ++k;
    }
    if (k + 1 >= d) break;
  }
  return total;
}

Int min_gens(const MonomialIdeal& a) {
  if (a.is_unit()) {
    throw Error(errc::invalid_ideal, "min_gens requires a proper nonzero ideal");
  }
  return Int(a.generators().size());
}

Int newton_multiplicity(const MonomialIdeal& a) {
  if (a.dimension() != 2) {
    throw Error(errc::unsupported, "newton_multiplicity is implemented for dimension 2 only");
  }
  if (!a.is_m_primary()) {
    throw Error(errc::infinite_colength, "newton_multiplicity needs an m-primary ideal");
  }
  // Generators sorted lex ascending: x increases, y strictly decreases.
  // Build the lower convex hull; dropped points lie inside the polyhedron.
  const auto& gens = a.generators();
  std::vector<Exponents> hull;
  for (const auto& g : gens) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& p = hull[hull.size() - 1];
      // cross of (p-o) x (g-o); keep strictly convex turns
      long long cross = (p[0] - o[0]) * (g[1] - o[1]) - (g[0] - o[0]) * (p[1] - o[1]);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(g);
  }
  // Shoelace over (0,0), hull vertices from (0, p_y) to (p_x, 0).
  std::vector<Exponents> polygon;
  polygon.push_back({0, 0});
  polygon.insert(polygon.end(), hull.begin(), hull.end());
  Int twice_area = 0;
  for (size_t i = 0; i < polygon.size(); ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % polygon.size()];
    twice_area += Int(p[0]) * q[1] - Int(q[0]) * p[1];
  }
  if (twice_area < 0) twice_area = -twice_area;
  return twice_area;
}

}  // namespace brim
