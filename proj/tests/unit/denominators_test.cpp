#include "tau/denominators.hpp"

#include <gtest/gtest.h>

using namespace tau;

TEST(PsiLcm, Examples) {
  DenominatorStats stats(TauEngine{}, 1);
  EXPECT_EQ(stats.psi_lcm(1, 1).value, 24);
  EXPECT_EQ(stats.psi_lcm(0, 3).value, 1);
  EXPECT_EQ(stats.psi_lcm(2, 1).value, 1152);
  EXPECT_THROW(stats.psi_lcm(0, 2), std::invalid_argument);
}

TEST(KappaLcm, GenusTwoAndThree) {
  DenominatorStats stats(TauEngine{}, 2);
  const DenominatorProfile d2 = stats.kappa_lcm(2);
  EXPECT_EQ(d2.value, 5760);
  EXPECT_EQ(render_factorization(d2.factors), "2^7 · 3^2 · 5");
  const DenominatorProfile d3 = stats.kappa_lcm(3);
  EXPECT_EQ(d3.order(2), 10);
  EXPECT_EQ(d3.order(3), 4);
  EXPECT_EQ(d3.order(5), 1);
  EXPECT_EQ(d3.order(7), 1);
  EXPECT_THROW(stats.kappa_lcm(1), std::invalid_argument);
  EXPECT_EQ(stats.kappa_lcm_extended(0), 1);
  EXPECT_EQ(stats.kappa_lcm_extended(1), 24);
}

TEST(KappaLcm, JsonProfile) {
  DenominatorStats stats(TauEngine{}, 1);
  const auto j = to_json(stats.kappa_lcm(2));
  EXPECT_EQ(j.dump(), R"({"factors":[[2,7],[3,2],[5,1]],"g":2,"value":"5760"})");
  EXPECT_EQ(to_json(stats.psi_lcm(1, 1))["n"], 1);
}

TEST(KappaPrimeOrders, PredictedOrders) {
  EXPECT_EQ(predicted_kappa_order(2, 2), 7);
  EXPECT_EQ(predicted_kappa_order(2, 3), 2);
  EXPECT_EQ(predicted_kappa_order(2, 5), 1);
  EXPECT_EQ(predicted_kappa_order(3, 2), 10);
  EXPECT_EQ(predicted_kappa_order(3, 7), 1);
  EXPECT_EQ(predicted_witness(2, 5), (std::vector<int>{2, 3}));
}

TEST(KappaPrimeOrders, WitnessAndReport) {
  DenominatorStats stats(TauEngine{}, 1);
  EXPECT_EQ(stats.find_witness(2, 5, 1, 3), (std::vector<int>{2, 3}));
  EXPECT_EQ(denominator_order(make_rational(29, 5760), 5), 1);
  for (int g = 2; g <= 3; ++g) {
    const Report r = stats.prime_order_check(g);
    EXPECT_TRUE(r.pass) << r.detail.dump();
  }
}

TEST(LcmDivisibility, Divisibility) {
  DenominatorStats stats(TauEngine{}, 1);
  EXPECT_TRUE(stats.divisibility_check(1, 1).pass);
  EXPECT_TRUE(stats.divisibility_check(0, 2).pass);
  EXPECT_TRUE(stats.divisibility_check(1, 2).pass);
}

TEST(PsiThreshold, Threshold) {
  DenominatorStats stats(TauEngine{}, 1);
  for (int g = 2; g <= 4; ++g) {
    const Report r = stats.threshold_check(g);
    EXPECT_TRUE(r.pass) << r.detail.dump();
    const auto minimal = stats.minimal_threshold(g, g / 2 + 1);
    ASSERT_TRUE(minimal.has_value());
    EXPECT_LE(*minimal, g / 2 + 1);
  }
}

TEST(AutomorphismBounds, Formulas) {
  const auto b2 = s_g_lower_bounds(2);
  EXPECT_EQ(b2[0], (PrimeOrder{2, 5}));
  EXPECT_EQ(b2[1], (PrimeOrder{3, 2}));
  EXPECT_EQ(b2[2], (PrimeOrder{5, 1}));
  EXPECT_EQ(s_g_lower_bounds(4)[0], (PrimeOrder{2, 11}));
  DenominatorStats stats(TauEngine{}, 1);
  for (int g = 2; g <= 4; ++g) EXPECT_TRUE(stats.compare_D_S(g).pass);
}
