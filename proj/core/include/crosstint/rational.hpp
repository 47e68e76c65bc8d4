#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point appears anywhere in a verification path.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace crosstint {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k). Zero for k < 0, n < 0, or k > n; C(n, 0) = 1.
Int binom(long long n, long long k);

// x^e with integer exponent; e < 0 requires x != 0.
Rat rat_pow(const Rat& x, long long e);

// Accepts "num/den" or a plain integer, with optional leading '-'.
// Throws std::invalid_argument on malformed text or zero denominator.
Rat parse_rat(std::string_view text);

// Canonical form: lowest terms, "num/den", the "/1" suffix omitted.
std::string format_rat(const Rat& value);

// Least integer >= value.
Int ceil_rat(const Rat& value);

}  // namespace crosstint
