#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace demishuffle {

/// Exact arbitrary-precision integer and rational coefficient types.
/// Rationals are kept canonical (lowest terms, positive denominator)
/// by the backend; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r) with the combinatorial convention: 0 unless 0 <= r <= n.
Integer binomial(long long n, long long r);

Integer factorial(int n);

/// c^n for n >= 0, with 0^0 = 1.
Rational rational_pow(const Rational &base, int n);

} // namespace demishuffle
