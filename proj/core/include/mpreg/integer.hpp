#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpreg {

/// Exact cohomology dimension (and signed Euler characteristic).
using Dim = boost::multiprecision::cpp_int;

/// binomial(top, k) for dimension counting: zero whenever top < k, k < 0 or top < 0.
Dim binomial(long top, long k);

/// Polynomial extension x(x-1)...(x-k+1)/k! for any integer x and k >= 0.
Dim binomial_ext(long x, long k);

std::string to_decimal(const Dim& value);

}  // namespace mpreg
