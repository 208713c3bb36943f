#include "brim/module.hpp"

#include <functional>
#include <sstream>

namespace brim {

DirectSumModule::DirectSumModule(std::vector<Ideal> summands) : summands_(std::move(summands)) {
  for (const auto& ideal : summands_) {
    long long slot = -1;
    for (size_t j = 0; j < distinct_.size(); ++j) {
      if (distinct_[j].equals(ideal)) {
        slot = static_cast<long long>(j);
        break;
      }
    }
    if (slot < 0) {
      distinct_.push_back(ideal);
      multiplicity_.push_back(1);
    } else {
      ++multiplicity_[static_cast<size_t>(slot)];
    }
  }
}

DirectSumModule DirectSumModule::make(std::vector<Ideal> summands) {
  if (summands.empty()) {
    throw Error(errc::invalid_ideal, "a module needs at least one summand");
  }
  const Ring ring = summands.front().ring();
  for (const auto& ideal : summands) {
    if (!(ideal.ring() == ring)) {
      throw Error(errc::ring_mismatch, "module summands live in different rings");
    }
    if (!ideal.is_m_primary()) {
      throw Error(errc::non_primary,
                  "module summand " + ideal.to_string() + " is not m-primary");
    }
  }
  return DirectSumModule(std::move(summands));
}

Int DirectSumModule::len_f_mod_m() const {
  Int total = 0;
  for (size_t j = 0; j < distinct_.size(); ++j) {
    total += Int(multiplicity_[j]) * distinct_[j].colength();
  }
  return total;
}

Int DirectSumModule::min_gens_total() const {
  Int total = 0;
  for (size_t j = 0; j < distinct_.size(); ++j) {
    total += Int(multiplicity_[j]) * distinct_[j].min_gens();
  }
  return total;
}

std::string DirectSumModule::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < summands_.size(); ++i) {
    if (i) out << " (+) ";
    out << summands_[i].to_string();
  }
  return out.str();
}

ProductCache::ProductCache(std::vector<Ideal> bases) : bases_(std::move(bases)) {
  powers_.resize(bases_.size());
  for (size_t j = 0; j < bases_.size(); ++j) powers_[j].push_back(bases_[j].power(0));
}

const Ideal& ProductCache::base_power(size_t j, long long k) {
  auto& column = powers_[j];
  while (static_cast<long long>(column.size()) <= k) {
    column.push_back(column.back().product(bases_[j]));
  }
  return column[static_cast<size_t>(k)];
}

const Ideal& ProductCache::ideal_at(const std::vector<long long>& exps) {
  auto& entry = entries_[exps];
  if (!entry.ideal) {
    long long lead = -1;
    for (size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] > 0) {
        lead = static_cast<long long>(j);
        break;
      }
    }
    if (lead < 0) {
      entry.ideal = bases_.front().power(0);
    } else {
      Ideal acc = base_power(static_cast<size_t>(lead), exps[static_cast<size_t>(lead)]);
      for (size_t j = static_cast<size_t>(lead) + 1; j < exps.size(); ++j) {
        if (exps[j] > 0) acc = acc.product(base_power(j, exps[j]));
      }
      entry.ideal = std::move(acc);
    }
  }
  return *entry.ideal;
}

Int ProductCache::colength_at(const std::vector<long long>& exps) {
  const Ideal& ideal = ideal_at(exps);
  auto& entry = entries_[exps];
  if (!entry.colength) entry.colength = ideal.colength();
  return *entry.colength;
}

Int ProductCache::min_gens_at(const std::vector<long long>& exps) {
  bool all_zero = true;
  for (long long e : exps) {
    if (e != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return 1;
  const Ideal& ideal = ideal_at(exps);
  auto& entry = entries_[exps];
  if (!entry.min_gens) entry.min_gens = ideal.min_gens();
  return *entry.min_gens;
}

ModuleEvaluator::ModuleEvaluator(const DirectSumModule& module, ProductCache& cache)
    : module_(module), cache_(cache) {
  for (const auto& ideal : module.distinct()) {
    long long found = -1;
    for (size_t j = 0; j < cache.bases().size(); ++j) {
      if (cache.bases()[j].equals(ideal)) {
        found = static_cast<long long>(j);
        break;
      }
    }
    if (found < 0) {
      throw Error(errc::ring_mismatch, "cache bases do not cover the module summands");
    }
    base_index_.push_back(static_cast<size_t>(found));
  }
}

template <typename Fn>
Int ModuleEvaluator::accumulate(long long n, Fn&& term_value) {
  const auto& mult = module_.multiplicities();
  const size_t k = module_.distinct().size();
  std::vector<long long> exps(cache_.bases().size(), 0);
  Int total = 0;
  // Walk weak compositions (i_1, ..., i_k) of n.
  std::function<void(size_t, long long, Int)> walk = [&](size_t j, long long rest, Int weight) {
    if (j + 1 == k) {
      exps[base_index_[j]] = rest;
      Int w = weight * binomial(rest + mult[j] - 1, mult[j] - 1);
      if (w != 0) total += w * term_value(exps);
      exps[base_index_[j]] = 0;
      return;
    }
    for (long long i = 0; i <= rest; ++i) {
      Int w = weight * binomial(i + mult[j] - 1, mult[j] - 1);
      if (w == 0) continue;
      exps[base_index_[j]] = i;
      walk(j + 1, rest - i, w);
      exps[base_index_[j]] = 0;
    }
  };
  walk(0, n, 1);
  return total;
}

Int ModuleEvaluator::bf(long long n) {
  return accumulate(n, [&](const std::vector<long long>& exps) { return cache_.colength_at(exps); });
}

Int ModuleEvaluator::fiber(long long n) {
  return accumulate(n, [&](const std::vector<long long>& exps) { return cache_.min_gens_at(exps); });
}

Int bf_value(const DirectSumModule& module, long long n) {
  ProductCache cache(module.distinct());
  return ModuleEvaluator(module, cache).bf(n);
}

Int fiber_value(const DirectSumModule& module, long long n) {
  ProductCache cache(module.distinct());
  return ModuleEvaluator(module, cache).fiber(n);
}

namespace {

template <typename Term>
Int naive_accumulate(const DirectSumModule& module, long long n, Term&& term_value) {
  const auto& summands = module.summands();
  const size_t r = summands.size();
  std::vector<long long> comp(r, 0);
  Int total = 0;
  std::function<void(size_t, long long)> walk = [&](size_t slot, long long rest) {
    if (slot + 1 == r) {
      comp[slot] = rest;
      Ideal prod = summands[0].power(comp[0]);
      for (size_t j = 1; j < r; ++j) prod = prod.product(summands[j].power(comp[j]));
      total += term_value(prod);
      comp[slot] = 0;
      return;
    }
    for (long long i = 0; i <= rest; ++i) {
      comp[slot] = i;
      walk(slot + 1, rest - i);
      comp[slot] = 0;
    }
  };
  walk(0, n);
  return total;
}

}  // namespace

Int bf_value_naive(const DirectSumModule& module, long long n) {
  return naive_accumulate(module, n, [](const Ideal& prod) { return prod.colength(); });
}

Int fiber_value_naive(const DirectSumModule& module, long long n) {
  return naive_accumulate(module, n,
                          [](const Ideal& prod) { return prod.is_unit() ? Int(1) : prod.min_gens(); });
}

}  // namespace brim
