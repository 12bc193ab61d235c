#ifndef BUBBLE_NUMBERS_HPP
#define BUBBLE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bubble {

// All counts are exact arbitrary-precision integers; averages are exact
// rationals. Doubles appear only in display/asymptotic-gap code.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt big_factorial(int n);

// C(n, k); zero outside 0 <= k <= n.
BigInt big_binomial(int n, int k);

// base^exp for exp >= 0, with 0^0 = 1.
BigInt big_pow(const BigInt& base, int exp);

// Unsigned Stirling numbers of the first kind, [n atop k] with [0 atop 0] = 1.
BigInt stirling_first(int n, int k);

double to_double(const BigRational& r);

}  // namespace bubble

#endif
