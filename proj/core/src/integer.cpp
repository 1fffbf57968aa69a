#include "mpreg/integer.hpp"

#include <algorithm>

namespace mpreg {

Dim binomial(long top, long k) {
  if (k < 0 || top < 0 || top < k) return 0;
  k = std::min(k, top - k);
  Dim r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= top - k + i;
    r /= i;
  }
  return r;
}

Dim binomial_ext(long x, long k) {
  if (k < 0) return 0;
  Dim num = 1;
  Dim den = 1;
  for (long i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

std::string to_decimal(const Dim& value) { return value.str(); }

}  // namespace mpreg
