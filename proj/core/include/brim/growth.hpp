#pragma once

#include "brim/errors.hpp"
#include "brim/int_math.hpp"

#include <string>
#include <vector>

namespace brim {

// Values f(n_lo), ..., f(n_lo + values.size() - 1), all exact.
struct IntegerSequenceWindow {
  long long n_lo = 0;
  std::vector<Int> values;

  long long n_hi() const { return n_lo + static_cast<long long>(values.size()) - 1; }
};

// Signed binomial bases. With degree D and term index i = 0..D:
//   hilbert_samuel, buchsbaum_rim: (-1)^i c_i C(n + D - i - 1, D - i)
//   fiber:                         (-1)^i c_i C(n + D - i,     D - i)
// The two shapes differ by a shift of one in the top argument.
enum class Convention { hilbert_samuel, buchsbaum_rim, fiber };

const char* convention_name(Convention c);
int convention_shift(Convention c);  // 1 for hilbert_samuel/buchsbaum_rim, 0 for fiber

// Degree D integer-valued polynomial stored both in Newton form (forward
// differences at an anchor, evaluated by polynomial extension) and as signed
// coefficients in the convention basis.
class BinomialPolynomial {
public:
  static BinomialPolynomial from_newton(Convention convention, long long anchor,
                                        std::vector<Int> differences);
  static BinomialPolynomial from_signed(Convention convention, std::vector<Int> coefficients);

  int degree() const { return static_cast<int>(signed_.size()) - 1; }
  Convention convention() const { return convention_; }
  long long anchor() const { return anchor_; }
  const std::vector<Int>& signed_coefficients() const { return signed_; }
  const std::vector<Int>& newton_differences() const { return newton_; }

  // Signed-basis value with the truncating binomial convention.
  Int evaluate(long long n) const;
  // Newton-form value, the honest polynomial at every integer.
  Int evaluate_extended(long long n) const;

  std::string to_string() const;

private:
  BinomialPolynomial(Convention convention, long long anchor, std::vector<Int> newton,
                     std::vector<Int> signed_coeffs)
      : convention_(convention),
        anchor_(anchor),
        newton_(std::move(newton)),
        signed_(std::move(signed_coeffs)) {}

  Convention convention_;
  long long anchor_;
  std::vector<Int> newton_;
  std::vector<Int> signed_;
};

// Re-express the polynomial in another convention basis of the same degree.
// expected_degree guards callers that pin the degree; mismatch is an error.
std::vector<Int> to_signed_coefficients(const BinomialPolynomial& poly, Convention convention,
                                        int expected_degree);

struct FitResult {
  BinomialPolynomial poly;
  // Smallest window index from which the sequence agrees with the polynomial.
  long long postulation;
};

// Fits a degree <= `degree` polynomial to the stable suffix of the window:
// finds the largest suffix where the (degree+1)-th forward differences
// vanish, fits the Newton form on the last degree+1 points, and checks the
// verify_window points before them. Throws NotStabilized when the suffix is
// shorter than degree + 1 + verify_window.
FitResult fit_polynomial(const IntegerSequenceWindow& window, int degree, int verify_window,
                         Convention convention);

}  // namespace brim
