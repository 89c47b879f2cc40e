#include "gluings/bigint.hpp"

#include <stdexcept>

namespace gluings {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // every prefix of the product is itself a binomial, so the division is exact
  for (int t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

BigInt perfect_matchings(int n) {
  if (n < 0) throw std::invalid_argument("perfect_matchings: negative argument");
  if (n % 2 != 0) return 0;
  BigInt r = 1;
  for (int i = 1; i < n; i += 2) r *= i;
  return r;
}

BigInt pow4(int exp) {
  if (exp < 0) throw std::invalid_argument("pow4: negative exponent");
  BigInt r = 1;
  r <<= 2 * exp;
  return r;
}

BigRat pow4_rat(int exp) {
  if (exp >= 0) return BigRat(pow4(exp));
  return BigRat(1, pow4(-exp));
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div: zero divisor");
  BigInt q = num / den;
  if (q * den != num) throw std::logic_error("exact_div: inexact division, broken identity");
  return q;
}

BigInt rat_to_int(const BigRat& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error("rat_to_int: value is not an integer, broken identity");
  return BigInt(boost::multiprecision::numerator(r));
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace gluings
