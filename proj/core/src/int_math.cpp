#include "brim/int_math.hpp"

namespace brim {

Int binomial(long long top, long long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  Int result = 1;
  for (long long i = 0; i < bottom; ++i) {
    result *= top - i;
    result /= i + 1;  // exact: partial products are binomials
  }
  return result;
}

Int binomial_ext(long long top, long long bottom) {
  if (bottom < 0) return 0;
  Int result = 1;
  for (long long i = 0; i < bottom; ++i) {
    result *= top - i;
    result /= i + 1;
  }
  return result;
}

std::string int_to_string(const Int& value) { return value.str(); }

}  // namespace brim
