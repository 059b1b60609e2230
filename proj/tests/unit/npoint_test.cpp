#include "tau/enumerate.hpp"
#include "tau/npoint.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tau;

TEST(Delta, SmallCases) {
  EXPECT_TRUE(delta_poly(1).is_zero());
  const GradedSymPoly d2 = delta_poly(2);
  EXPECT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2.coefficient({2, 1}), 1);
  EXPECT_EQ(d2.coefficient({1, 2}), 1);
  EXPECT_EQ(delta_poly(3).coefficient({1, 1, 1}), 2);
}

TEST(OnePoint, SeriesCoefficients) {
  const GradedSymPoly g = one_point_G(10);
  EXPECT_EQ(g.coefficient({1}), make_rational(1, 24));
  EXPECT_EQ(g.coefficient({4}), make_rational(-1, 1152));
  EXPECT_EQ(g.coefficient({2}), 0);
}

TEST(NPoint, TwoPointValues) {
  NPointEngine engine(4);
  const NPointFunction& fn = engine.function(2);
  const std::vector<int> a{2, 3};
  const std::vector<int> b{1, 4};
  const std::vector<int> c{0, 1};
  EXPECT_EQ(extract_bracket(fn, a), make_rational(29, 5760));
  EXPECT_EQ(extract_bracket(fn, b), make_rational(1, 384));
  EXPECT_EQ(extract_bracket(fn, c), 0);
}

TEST(NPoint, AgreesWithRecursionUpToDegree15) {
  TauEngine oracle;
  NPointEngine engine(6);
  for (int n = 1; n <= 4; ++n) {
    const NPointFunction& fn = engine.function(n);
    for (int g = 0; g <= 6 && 3 * g - 3 + n <= 15; ++g) {
      if (2 * g - 2 + n <= 0) continue;
      for_each_multiset_with_sum(n, 3L * g - 3 + n, 0, [&](const std::vector<int>& d) {
        std::vector<int> perm = d;
        do {
          ASSERT_EQ(extract_bracket(fn, perm), oracle.bracket(g, perm)) << "n=" << n << " g=" << g;
        } while (std::next_permutation(perm.begin(), perm.end()));
      });
    }
  }
}

TEST(NPoint, TwoPointAgreesWithRecursionToGenus12) {
  TauEngine oracle;
  NPointEngine engine(12);
  const NPointFunction& fn = engine.function(2);
  for (int g = 1; g <= 12; ++g) {
    for (int a = 0; a <= 3 * g - 1; ++a) {
      const std::vector<int> d{a, 3 * g - 1 - a};
      ASSERT_EQ(extract_bracket(fn, d), oracle.bracket(g, d)) << "g=" << g;
    }
  }
}

TEST(NPoint, Symmetry) {
  NPointEngine engine(4);
  for (int n = 2; n <= 4; ++n) {
    for (int g = 0; g <= 4; ++g) {
      if (2 * g - 2 + n <= 0) continue;
      EXPECT_TRUE(engine.function(n).g_component(g).is_symmetric());
      EXPECT_TRUE(engine.function(n).f_component(g).is_symmetric());
    }
  }
}

TEST(NPoint, PNumeratorDivisible) {
  NPointEngine engine(6);
  for (int n = 3; n <= 4; ++n) {
    for (int r = 0; r <= 6; ++r) EXPECT_NO_THROW(engine.p_polynomial(n, r)) << "n=" << n << " r=" << r;
  }
  EXPECT_GT(engine.divisions_checked(), 0u);
  // n = 2: the r = 0 numerator carries the unstable genus-0 term; r >= 1 divide exactly
  for (int r = 1; r <= 6; ++r) EXPECT_NO_THROW(engine.p_numerator(2, r).divide_by_variable_sum()) << "r=" << r;
}

TEST(NPoint, ImplicitAndExpandedPAgree) {
  NPointEngine engine(5);
  for (int n = 3; n <= 4; ++n) {
    for (int r = 0; r <= 5; ++r) {
      const GradedSymPoly p = engine.p_polynomial(n, r);
      const GradedSymPoly numerator = engine.p_numerator(n, r);
      EXPECT_EQ(GradedSymPoly::variable_sum(n) * p * make_rational(2), numerator) << "n=" << n << " r=" << r;
    }
  }
}

// Implicit form: multiply the full series over all genera, then keep degree 3r + n - 2.
TEST(NPoint, ImplicitNumeratorMatchesDegreeFilteredProduct) {
  const int top = 3;
  NPointEngine engine(top);
  for (int n = 3; n <= 4; ++n) {
    std::vector<GradedSymPoly> weighted_sum(1u << n, GradedSymPoly(n));
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> slots;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) slots.push_back(i);
      }
      const int k = static_cast<int>(slots.size());
      // one point: G(x) = exp(-x^3/24) F(x) = x^-2 exactly, so S^2 G = 1
      GradedSymPoly total(n);
      for (int g = 0; g <= top; ++g) {
        const GradedSymPoly w = k == 1 ? (g == 0 ? GradedSymPoly::constant(1, 1) : GradedSymPoly(1))
                                       : engine.function(k).weighted_component(g);
        total += w.embed(n, slots);
      }
      weighted_sum[mask] = total;
    }
    for (int r = 0; r <= top; ++r) {
      GradedSymPoly implicit(n);
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        const unsigned rest = ((1u << n) - 1) & ~mask;
        implicit += (weighted_sum[mask] * weighted_sum[rest]).homogeneous_part(3 * r + n - 2);
      }
      EXPECT_EQ(implicit, engine.p_numerator(n, r)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Merged, Examples) {
  NPointEngine engine(3);
  const MergedSeries one = merged_series(engine, 1);
  const std::vector<int> x1{1};
  const std::vector<int> x0{0};
  EXPECT_EQ(one.coefficient(2, x1), make_rational(1, 12));
  EXPECT_EQ(one.coefficient(4, x0), 0);
  const MergedSeries two = merged_series(engine, 2);
  const std::vector<int> x11{1, 1};
  EXPECT_EQ(two.coefficient(2, x11), make_rational(1, 4));
}

TEST(Merged, OddPowersOfYVanish) {
  NPointEngine engine(3);
  for (int n = 1; n <= 2; ++n) {
    const MergedSeries m = merged_series(engine, n);
    for (int g = 0; g <= m.max_genus(); ++g) {
      for (const auto& [e, c] : m.component(g).terms()) EXPECT_EQ(e[0] % 2, 0);
    }
  }
}

TEST(SeedTable, InsertsConsistentValues) {
  NPointEngine engine(6);
  TauEngine oracle;
  BracketTable table;
  EXPECT_GT(seed_table(engine, 3, table), 0u);
  for (const auto& [key, value] : table.entries()) ASSERT_EQ(oracle.bracket(key.genus, key.exponents), value);
}
