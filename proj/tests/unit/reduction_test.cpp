#include "tau/enumerate.hpp"
#include "tau/reduction.hpp"

#include <gtest/gtest.h>

using namespace tau;

TEST(KappaTransform, Examples) {
  TauEngine engine;
  EXPECT_EQ(kappa_to_psi(engine, MixedKey{1, {0}, {1}}), make_rational(1, 24));
  EXPECT_EQ(kappa_to_psi(engine, MixedKey{1, {0}, {0, 1}}), make_rational(1, 24));
  EXPECT_EQ(kappa_to_psi(engine, MixedKey{1, {0}, {1, 0, 0}}), make_rational(1, 24));
  // Weil-Petersson volume term of M_2
  EXPECT_EQ(kappa_to_psi(engine, MixedKey{2, {}, {1, 1, 1}}), make_rational(43, 2880));
  EXPECT_EQ(kappa_to_psi(engine, MixedKey{2, {}, {1}}), 0);
}

// kappa_0 = 2g - 2 + n
TEST(KappaTransform, KappaZeroLaw) {
  TauEngine engine;
  for (int g = 0; g <= 3; ++g) {
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const long dim = 3L * g - 3 + n;
      for (int m = 1; m <= 3; ++m) {
        for (long kdeg = 0; kdeg <= dim; ++kdeg) {
          for_each_multiset_with_sum(m, kdeg, 0, [&](const std::vector<int>& a) {
            for_each_multiset_with_sum(n, dim - kdeg, 0, [&](const std::vector<int>& d) {
              std::vector<int> with_zero = a;
              with_zero.push_back(0);
              EXPECT_EQ(kappa_to_psi(engine, MixedKey{g, d, with_zero}),
                        Rational(2 * g - 2 + n) * kappa_to_psi(engine, MixedKey{g, d, a}))
                  << "g=" << g << " n=" << n;
            });
          });
        }
      }
    }
  }
}

// a single kappa_a is the pushforward of psi^{a+1}
TEST(KappaTransform, SingleKappaLaw) {
  TauEngine engine;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const long dim = 3L * g - 3 + n;
      for (long a = 0; a <= dim; ++a) {
        for_each_multiset_with_sum(n, dim - a, 0, [&](const std::vector<int>& d) {
          std::vector<int> psi = d;
          psi.push_back(static_cast<int>(a) + 1);
          EXPECT_EQ(kappa_to_psi(engine, MixedKey{g, d, {static_cast<int>(a)}}), engine.bracket(g, psi));
        });
      }
    }
  }
}

TEST(LambdaG, Examples) {
  const std::vector<int> d0{0};
  const std::vector<int> d1{1};
  const std::vector<int> d2{2};
  EXPECT_EQ(lambda_g_bracket(1, d0), make_rational(1, 24));
  // <tau_2 lambda_2>_2 = (7/8)(1/30)/24
  EXPECT_EQ(lambda_g_bracket(2, d2), make_rational(7, 5760));
  EXPECT_EQ(lambda_g_bracket(2, d1), 0);
  EXPECT_EQ(lambda_g_bracket(1, d1), 0);
  EXPECT_THROW(lambda_g_bracket(0, d0), std::invalid_argument);
}

TEST(ChInsertion, Examples) {
  TauEngine engine;
  const std::vector<int> zeros{0, 0};
  const std::vector<int> one{0};
  EXPECT_EQ(ch_insertion(engine, 1, 2, zeros), 0);
  // ch_1 = lambda_1 = lambda_g at g = 1
  EXPECT_EQ(ch_insertion(engine, 1, 1, one), lambda_g_bracket(1, one));
  // <tau_1 lambda_2 lambda_1>_2 = -3! <ch_3 tau_1>_2
  const std::vector<int> d1{1};
  EXPECT_EQ(Rational(-6) * ch_insertion(engine, 2, 2, d1), make_rational(1, 2880));
}

TEST(LambdaGG1, ClosedFormAgreement) {
  TauEngine engine;
  const std::vector<int> a{1};
  const std::vector<int> b{2};
  EXPECT_EQ(lambda_gg1_bracket(engine, 2, a), make_rational(1, 2880));
  EXPECT_EQ(lambda_gg1_bracket(engine, 3, b), make_rational(1, 120960));
  EXPECT_EQ(lambda_gg1_closed(3, b), make_rational(1, 120960));
  EXPECT_EQ(lambda_gg1_bracket(engine, 2, b), 0);
  EXPECT_EQ(faber_kappa_constant(2), make_rational(1, 2880));
  for (int g = 2; g <= 5; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for_each_multiset_with_sum(n, g - 2 + n, 1, [&](const std::vector<int>& d) {
        EXPECT_EQ(lambda_gg1_bracket(engine, g, d), lambda_gg1_closed(g, d)) << "g=" << g;
      });
    }
  }
}
