#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gluings {

// Every count in this project is an exact integer; intermediate values that
// carry 4^{-j} style denominators are exact rationals. No floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// binomial(n, k) with the usual convention: 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

// Number of perfect matchings of n points, i.e. (n-1)!! for even n, 0 for odd.
BigInt perfect_matchings(int n);

BigInt pow4(int exp);

// 4^exp as a rational, valid for negative exponents too.
BigRat pow4_rat(int exp);

// Division that a correct identity guarantees to be exact; a nonzero
// remainder is an internal-consistency failure, not bad input.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Rational that an identity guarantees to be an integer.
BigInt rat_to_int(const BigRat& r);

std::string to_decimal(const BigInt& v);

}  // namespace gluings
