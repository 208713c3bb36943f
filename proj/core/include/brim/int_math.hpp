#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace brim {

// All lengths, multiplicities and polynomial coefficients are arbitrary
// precision. Exponents stay in long long; they are tiny by construction.
using Int = boost::multiprecision::cpp_int;

// C(top, bottom) with the truncating convention: 0 when bottom < 0 or
// top < bottom. This is the convention used when evaluating fitted
// polynomials in the shifted binomial basis.
Int binomial(long long top, long long bottom);

// C(top, bottom) as a polynomial in top: top(top-1)...(top-bottom+1)/bottom!.
// Defined for negative top; used by the Newton-form evaluation.
Int binomial_ext(long long top, long long bottom);

// Decimal rendering, used by report formatting.
std::string int_to_string(const Int& value);

}  // namespace brim
