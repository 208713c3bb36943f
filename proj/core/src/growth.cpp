#include "brim/growth.hpp"

#include <cassert>
#include <sstream>

namespace brim {

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::hilbert_samuel: return "HILBERT_SAMUEL";
    case Convention::buchsbaum_rim: return "BUCHSBAUM_RIM";
    case Convention::fiber: return "FIBER";
  }
  return "?";
}

int convention_shift(Convention c) { return c == Convention::fiber ? 0 : 1; }

namespace {

// Signed basis element i as a polynomial in n, without truncation.
Int basis_value_ext(Convention convention, int degree, int i, long long n) {
  const int shift = convention_shift(convention);
  Int v = binomial_ext(n + degree - i - shift, degree - i);
  return (i % 2 == 0) ? v : -v;
}

std::vector<Int> forward_differences(const std::vector<Int>& values) {
  // Leading entry of each difference level at the left end.
  std::vector<Int> work = values;
  std::vector<Int> lead;
  lead.reserve(values.size());
  lead.push_back(work[0]);
  for (size_t level = 1; level < values.size(); ++level) {
    for (size_t i = 0; i + level < values.size(); ++i) work[i] = work[i + 1] - work[i];
    lead.push_back(work[0]);
  }
  return lead;
}

// Convert a value table at anchor..anchor+D into signed coefficients by
// peeling basis elements in decreasing degree. The (D-i)-th difference of
// basis element i is (-1)^i, so each step reads one coefficient off the
// residual's top difference.
std::vector<Int> values_to_signed(Convention convention, long long anchor,
                                  std::vector<Int> values) {
  const int degree = static_cast<int>(values.size()) - 1;
  std::vector<Int> coeffs(static_cast<size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) {
    std::vector<Int> work = values;
    for (int level = 0; level < degree - i; ++level) {
      for (size_t k = 0; k + 1 < work.size(); ++k) work[k] = work[k + 1] - work[k];
      work.pop_back();
    }
    Int top = work[0];
    coeffs[static_cast<size_t>(i)] = (i % 2 == 0) ? top : -top;
    for (size_t k = 0; k < values.size(); ++k) {
      values[k] -= coeffs[static_cast<size_t>(i)] *
                   basis_value_ext(convention, degree, i, anchor + static_cast<long long>(k));
    }
  }
  for (const Int& v : values) {
    if (v != 0) {
      throw Error(errc::convention_mismatch, "signed basis conversion left a nonzero residual");
    }
  }
  return coeffs;
}

}  // namespace

BinomialPolynomial BinomialPolynomial::from_newton(Convention convention, long long anchor,
                                                   std::vector<Int> differences) {
  if (differences.empty()) {
    throw Error(errc::convention_mismatch, "empty Newton form");
  }
  const int degree = static_cast<int>(differences.size()) - 1;
  // Rebuild the value table from the differences, then convert.
  std::vector<Int> values;
  values.reserve(differences.size());
  for (int k = 0; k <= degree; ++k) {
    Int v = 0;
    for (int j = 0; j <= k; ++j) v += differences[static_cast<size_t>(j)] * binomial(k, j);
    values.push_back(std::move(v));
  }
  auto coeffs = values_to_signed(convention, anchor, values);
  return BinomialPolynomial(convention, anchor, std::move(differences), std::move(coeffs));
}

BinomialPolynomial BinomialPolynomial::from_signed(Convention convention,
                                                   std::vector<Int> coefficients) {
  if (coefficients.empty()) {
    throw Error(errc::convention_mismatch, "empty coefficient list");
  }
  const int degree = static_cast<int>(coefficients.size()) - 1;
  const long long anchor = 0;
  std::vector<Int> values;
  values.reserve(coefficients.size());
  for (int k = 0; k <= degree; ++k) {
    Int v = 0;
    for (int i = 0; i <= degree; ++i) {
      v += coefficients[static_cast<size_t>(i)] * basis_value_ext(convention, degree, i, anchor + k);
    }
    values.push_back(std::move(v));
  }
  auto diffs = forward_differences(values);
  return BinomialPolynomial(convention, anchor, std::move(diffs), std::move(coefficients));
}

Int BinomialPolynomial::evaluate(long long n) const {
  const int D = degree();
  const int shift = convention_shift(convention_);
  Int v = 0;
  for (int i = 0; i <= D; ++i) {
    Int term = signed_[static_cast<size_t>(i)] * binomial(n + D - i - shift, D - i);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

Int BinomialPolynomial::evaluate_extended(long long n) const {
  Int v = 0;
  for (size_t k = 0; k < newton_.size(); ++k) {
    v += newton_[k] * binomial_ext(n - anchor_, static_cast<long long>(k));
  }
  return v;
}

std::string BinomialPolynomial::to_string() const {
  std::ostringstream out;
  out << convention_name(convention_) << "(";
  for (size_t i = 0; i < signed_.size(); ++i) {
    if (i) out << ", ";
    out << signed_[i].str();
  }
  out << ")";
  return out.str();
}

std::vector<Int> to_signed_coefficients(const BinomialPolynomial& poly, Convention convention,
                                        int expected_degree) {
  if (expected_degree != poly.degree()) {
    throw Error(errc::convention_mismatch,
                "polynomial degree " + std::to_string(poly.degree()) +
                    " does not match requested degree " + std::to_string(expected_degree));
  }
  if (convention == poly.convention()) return poly.signed_coefficients();
  std::vector<Int> values;
  values.reserve(static_cast<size_t>(poly.degree()) + 1);
  for (int k = 0; k <= poly.degree(); ++k) {
    values.push_back(poly.evaluate_extended(poly.anchor() + k));
  }
  return values_to_signed(convention, poly.anchor(), std::move(values));
}

FitResult fit_polynomial(const IntegerSequenceWindow& window, int degree, int verify_window,
                         Convention convention) {
  if (degree < 0) throw Error(errc::convention_mismatch, "negative degree");
  if (verify_window < 1) throw Error(errc::convention_mismatch, "verify window must be positive");
  const long long len = static_cast<long long>(window.values.size());
  const long long need = degree + 1 + verify_window;
  if (len < need) {
    throw Error(errc::not_stabilized,
                "window of length " + std::to_string(len) + " is shorter than " +
                    std::to_string(need));
  }

  // (degree+1)-th forward differences; entry i uses values[i..i+degree+1].
  std::vector<Int> diff(window.values.begin(), window.values.end());
  for (int level = 0; level <= degree; ++level) {
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }

  long long stable_from = static_cast<long long>(diff.size());
  while (stable_from > 0 && diff[static_cast<size_t>(stable_from - 1)] == 0) --stable_from;
  // Suffix of values agreeing with one degree <= D polynomial.
  const long long suffix_len = len - stable_from;
  if (suffix_len < need) {
    throw Error(errc::not_stabilized,
                "differences of order " + std::to_string(degree + 1) +
                    " do not vanish on a suffix of length " + std::to_string(need));
  }

  const long long anchor_idx = len - degree - 1;
  std::vector<Int> tail(window.values.begin() + anchor_idx, window.values.end());
  auto newton = forward_differences(tail);
  auto poly =
      BinomialPolynomial::from_newton(convention, window.n_lo + anchor_idx, std::move(newton));

  // Independent confirmation on the verify window before the fit points.
  for (long long i = anchor_idx - verify_window; i < anchor_idx; ++i) {
    if (poly.evaluate_extended(window.n_lo + i) != window.values[static_cast<size_t>(i)]) {
      throw Error(errc::not_stabilized, "fit does not reproduce the verification points");
    }
  }

  return FitResult{std::move(poly), window.n_lo + stable_from};
}

}  // namespace brim
