#include "tau/exact.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace tau;

namespace {

// B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
std::vector<Rational> bernoulli_by_recurrence(int m) {
  std::vector<Rational> b(static_cast<std::size_t>(m + 1));
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * b[j];
    b[k] = -s / Rational(k + 1);
  }
  return b;
}

}  // namespace

TEST(DoubleFactorial, SmallValues) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(9), 945);
  EXPECT_THROW(double_factorial(-3), std::invalid_argument);
}

TEST(Bernoulli, MatchesRecurrence) {
  const auto oracle = bernoulli_by_recurrence(40);
  for (int m = 2; m <= 40; m += 2) EXPECT_EQ(bernoulli(m), oracle[m]) << "m=" << m;
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

TEST(Valuation, SignedOrder) {
  EXPECT_EQ(ord_at_prime(make_rational(1, 5760), 2), -7);
  EXPECT_EQ(ord_at_prime(make_rational(24), 3), 1);
  EXPECT_EQ(ord_at_prime(make_rational(29, 5760), 5), -1);
  EXPECT_EQ(ord_at_prime(Integer(1024), 2), 10);
}

TEST(LcmOfDenominators, Examples) {
  const std::vector<Rational> a{make_rational(1, 24)};
  const std::vector<Rational> b{make_rational(1, 12), make_rational(1, 24)};
  const std::vector<Rational> c{make_rational(29, 5760), make_rational(1, 384)};
  EXPECT_EQ(lcm_of_denominators(a), 24);
  EXPECT_EQ(lcm_of_denominators(b), 24);
  EXPECT_EQ(lcm_of_denominators(c), 5760);
  EXPECT_EQ(lcm_of_denominators(std::vector<Rational>{}), 1);
}

TEST(Factorize, RoundTrip) {
  for (long n = 1; n <= 3000; ++n) {
    const auto f = factorize(Integer(n));
    EXPECT_EQ(expand(f), n);
  }
  EXPECT_EQ(factorize(Integer(5760)), (std::vector<PrimeOrder>{{2, 7}, {3, 2}, {5, 1}}));
}

TEST(Multinomial, Basics) {
  const std::vector<int> a{1, 4};
  const std::vector<int> b{2, 3};
  EXPECT_EQ(multinomial(a), 5);
  EXPECT_EQ(multinomial(b), 10);
  EXPECT_EQ(binomial(5, 7), 0);
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}
