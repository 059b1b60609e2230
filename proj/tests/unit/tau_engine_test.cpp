#include "tau/enumerate.hpp"
#include "tau/tau_engine.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace tau;

TEST(TauEngine, Examples) {
  TauEngine engine;
  EXPECT_EQ(engine.bracket(0, {0, 0, 0}), 1);
  EXPECT_EQ(engine.bracket(1, {1}), make_rational(1, 24));
  EXPECT_EQ(engine.bracket(2, {2, 3}), make_rational(29, 5760));
  EXPECT_EQ(engine.bracket(2, {1, 4}), make_rational(1, 384));
  EXPECT_EQ(engine.bracket(1, {0, 0}), 0);
  EXPECT_EQ(engine.bracket(0, {0, 0}), 0);
  EXPECT_EQ(engine.bracket(1, {-1, 3}), 0);
}

TEST(TauEngine, OnePoint) {
  EXPECT_EQ(one_point(1), make_rational(1, 24));
  EXPECT_EQ(one_point(2), make_rational(1, 1152));
  EXPECT_EQ(one_point(3), make_rational(1, 82944));
  TauEngine engine;
  for (int g = 1; g <= 8; ++g) EXPECT_EQ(engine.bracket(g, {3 * g - 2}), one_point(g));
  EXPECT_THROW(one_point(0), std::invalid_argument);
}

TEST(Genus0, ClosedForm) {
  const std::vector<int> a{0, 0, 0};
  const std::vector<int> b{1, 0, 0, 0};
  const std::vector<int> c{1, 1, 0, 0, 0};
  EXPECT_EQ(genus0_closed(a), 1);
  EXPECT_EQ(genus0_closed(b), 1);
  EXPECT_EQ(genus0_closed(c), 2);
}

TEST(Genus0, RecursionAgreesWithClosedForm) {
  TauEngine dvv(EngineOptions{Pivot::Largest, true, false});
  for (int n = 3; n <= 8; ++n) {
    for_each_multiset_with_sum(n, n - 3, 0, [&](const std::vector<int>& d) {
      EXPECT_EQ(dvv.bracket(0, d), genus0_closed(d));
    });
  }
}

TEST(TauEngine, PivotChoiceDoesNotMatter) {
  TauEngine largest(EngineOptions{Pivot::Largest});
  TauEngine smallest(EngineOptions{Pivot::SmallestPositive});
  for (int g = 0; g <= 4; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for_each_multiset_with_sum(n, 3L * g - 3 + n, 0, [&](const std::vector<int>& d) {
        EXPECT_EQ(largest.bracket(g, d), smallest.bracket(g, d)) << "g=" << g;
      });
    }
  }
}

TEST(TauEngine, SymmetricInArguments) {
  TauEngine engine;
  std::vector<int> d{0, 1, 3, 6};
  const Rational v = engine.bracket(3, d);
  ASSERT_NE(v, 0);
  do {
    EXPECT_EQ(engine.bracket(3, d), v);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST(TauEngine, StringAndDilatonEquations) {
  TauEngine engine;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 4);
    if (2 * g - 2 + n <= 0) continue;
    // random d with sum 3g - 3 + n + 1 for the string equation
    const int total = 3 * g - 2 + n;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < total; ++k) ++d[rng() % d.size()];

    std::vector<int> with_zero = d;
    with_zero.push_back(0);
    Rational expected = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      std::vector<int> lowered = d;
      --lowered[j];
      expected += engine.bracket(g, lowered);
    }
    EXPECT_EQ(engine.bracket(g, with_zero), expected);

    // dilaton: <tau_1 tau_e>_g = (2g - 2 + n) <tau_e>_g, |e| = 3g - 3 + n
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < 3 * g - 3 + n; ++k) ++e[rng() % e.size()];
    std::vector<int> with_one = e;
    with_one.push_back(1);
    EXPECT_EQ(engine.bracket(g, with_one), Rational(2 * g - 2 + n) * engine.bracket(g, e));
  }
}

TEST(BracketTable, ConflictingInsertThrows) {
  BracketTable table;
  table.insert(TauKey(1, {1}), make_rational(1, 24));
  EXPECT_NO_THROW(table.insert(TauKey(1, {1}), make_rational(1, 24)));
  EXPECT_THROW(table.insert(TauKey(1, {1}), make_rational(1, 25)), std::logic_error);
}

TEST(BracketTable, MemoHitsOnRepeat) {
  TauEngine engine;
  engine.bracket(3, {2, 3, 5, 0});
  const auto misses = engine.table().misses();
  engine.bracket(3, {5, 3, 2, 0});
  EXPECT_EQ(engine.table().misses(), misses);
  EXPECT_GT(engine.table().hits(), 0u);
}
