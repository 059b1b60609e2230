#include "tau/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tau {

namespace {

constexpr long kTableSize = 512;

const std::vector<Integer>& double_factorial_table() {
  static const std::vector<Integer> table = [] {
    // index k + 1 holds k!!, so index 0 is (-1)!!
    std::vector<Integer> t(kTableSize + 2);
    t[0] = 1;
    t[1] = 1;
    for (long k = 1; k <= kTableSize; ++k) {
      t[k + 1] = t[k - 1] * k;
    }
    return t;
  }();
  return table;
}

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kTableSize + 1);
    t[0] = 1;
    for (long k = 1; k <= kTableSize; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

}  // namespace

Integer double_factorial(long k) {
  if (k < -1) {
    throw std::invalid_argument("double_factorial: argument " + std::to_string(k) +
                                " is below -1");
  }
  if (k <= kTableSize) return double_factorial_table()[k + 1];
  const long start = (k - kTableSize) % 2 == 0 ? kTableSize : kTableSize - 1;
  Integer result = double_factorial_table()[start + 1];
  for (long j = start + 2; j <= k; j += 2) result *= j;
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  if (n <= kTableSize) return factorial_table()[n];
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer multinomial(std::span<const int> parts) {
  long total = 0;
  Integer denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    denom *= factorial(p);
  }
  return factorial(total) / denom;
}

Rational bernoulli(long m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("bernoulli: index must be even and >= 2, got " + std::to_string(m));
  }
  static std::mutex mutex;
  static std::vector<Rational> cache;  // cache[i] = B_i
  std::lock_guard lock(mutex);
  if (static_cast<long>(cache.size()) <= m) {
    const long n = std::max<long>(m, 2 * static_cast<long>(cache.size()));
    cache.assign(static_cast<std::size_t>(n + 1), Rational(0));
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
      row[i] = Rational(1, i + 1);
      for (long j = i; j >= 1; --j) {
        row[j - 1] = j * (row[j - 1] - row[j]);
      }
      cache[i] = row[0];
    }
  }
  return cache[m];
}

long ord_at_prime(const Integer& n, long p) {
  if (n == 0) throw std::invalid_argument("ord_at_prime: valuation of zero is undefined");
  if (p < 2) throw std::invalid_argument("ord_at_prime: prime must be >= 2");
  Integer value = abs(n);
  long order = 0;
  while (mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    value /= p;
    ++order;
  }
  return order;
}

long ord_at_prime(const Rational& r, long p) {
  if (r == 0) throw std::invalid_argument("ord_at_prime: valuation of zero is undefined");
  return ord_at_prime(Integer(r.get_num()), p) - ord_at_prime(Integer(r.get_den()), p);
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer result = 1;
  for (const auto& v : values) {
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_den_mpz_t());
  }
  return result;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimeOrder> factorize(Integer n) {
  if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<PrimeOrder> factors;
  for (long p = 2; Integer(p) * p <= n; ++p) {
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw std::overflow_error("factorize: prime factor exceeds long");
    factors.push_back({n.get_si(), 1});
  }
  return factors;
}

Integer expand(std::span<const PrimeOrder> factors) {
  Integer result = 1;
  for (const auto& f : factors) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(f.prime),
                  static_cast<unsigned long>(f.order));
    result *= power;
  }
  return result;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tau
