#pragma once

/*
 * Arbitrary-precision integer and rational scalars plus the handful of
 * number-theoretic helpers the rest of the library needs: floor division,
 * primality, and distinct prime factors.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "compmat/errors.hpp"

namespace compmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Quotient rounded toward negative infinity. b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Remainder with the sign of b.
inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline Integer ipow(Integer base, std::size_t exp) {
  Integer result = 1;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Local engine keeps the test reentrant and deterministic.
  boost::random::mt19937 gen(0x5eedU);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

namespace detail {

inline Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    Integer x = 2;
    Integer y = 2;
    Integer d = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(x - y, n);
    }
    if (d != n) return d;
  }
}

inline void collect_factors(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace detail

/// Distinct prime divisors of a nonzero integer, ascending.
inline std::vector<Integer> prime_factors(const Integer& value) {
  if (value == 0) throw DomainError("prime_factors: zero has no finite factorization");
  Integer n = abs_value(value);
  std::vector<Integer> out;
  for (unsigned p = 2; p < 1000 && Integer(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  detail::collect_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace compmat
