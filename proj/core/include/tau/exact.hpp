#pragma once

// Exact integer/rational arithmetic and the small number-theoretic helpers
// used by every other part of the library. Values are GMP-backed; all public
// rationals are kept in canonical (reduced, positive denominator) form.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tau {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation entry of a factorization.
struct PrimeOrder {
  long prime = 2;
  long order = 0;

  friend bool operator==(const PrimeOrder&, const PrimeOrder&) = default;
};

/// k!! for k >= -1, with (-1)!! = 0!! = 1. Throws std::invalid_argument for k < -1.
Integer double_factorial(long k);

/// n! for n >= 0.
Integer factorial(long n);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Multinomial coefficient (sum parts)! / prod(parts!). Throws on negative parts.
Integer multinomial(std::span<const int> parts);

/// Bernoulli number B_m for even m >= 2 (B_2 = 1/6).
/// Computed with the Akiyama-Tanigawa transform.
Rational bernoulli(long m);

/// Exponent of prime p in the nonzero integer n.
long ord_at_prime(const Integer& n, long p);

/// p-adic valuation of a nonzero rational: ord(p, num) - ord(p, den).
long ord_at_prime(const Rational& r, long p);

/// lcm of the reduced denominators; the empty list gives 1.
Integer lcm_of_denominators(std::span<const Rational> values);

/// Primes <= bound in increasing order.
std::vector<long> primes_up_to(long bound);

/// Prime factorization of a positive integer (trial division).
std::vector<PrimeOrder> factorize(Integer n);

/// prod p^e over the factorization.
Integer expand(std::span<const PrimeOrder> factors);

/// Canonical "num/den" text; the denominator is omitted when it is 1.
std::string to_string(const Rational& r);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Builds num/den in canonical form.
Rational make_rational(long num, long den = 1);

}  // namespace tau
