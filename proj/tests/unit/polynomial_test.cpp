#include "tau/polynomial.hpp"

#include <gtest/gtest.h>

using namespace tau;

TEST(GradedSymPoly, ArithmeticAndCap) {
  const GradedSymPoly s = GradedSymPoly::variable_sum(2);
  const GradedSymPoly sq = s * s;
  EXPECT_EQ(sq.coefficient({1, 1}), 2);
  EXPECT_EQ(sq.coefficient({2, 0}), 1);

  GradedSymPoly capped = GradedSymPoly::variable_sum(2);
  capped.set_degree_cap(2);
  const GradedSymPoly cube = capped.pow(3);
  EXPECT_TRUE(cube.is_zero());
  EXPECT_THROW(cube.coefficient({2, 1}), std::out_of_range);
}

TEST(GradedSymPoly, ExactDivisionBySum) {
  // (x1 + x2 + x3)(x1^2 + 2 x2 x3) / (x1 + x2 + x3)
  GradedSymPoly q(3);
  q.add_term({2, 0, 0}, 1);
  q.add_term({0, 1, 1}, 2);
  const GradedSymPoly p = GradedSymPoly::variable_sum(3) * q;
  EXPECT_EQ(p.divide_by_variable_sum(), q);

  GradedSymPoly bad = p;
  bad.add_term({0, 0, 3}, 1);
  EXPECT_THROW(bad.divide_by_variable_sum(), DivisibilityError);
}

TEST(GradedSymPoly, PermutationAndSymmetry) {
  GradedSymPoly p(3);
  p.add_term({2, 1, 0}, 1);
  EXPECT_FALSE(p.is_symmetric());
  const std::vector<int> perm{1, 0, 2};
  EXPECT_EQ(p.permuted(perm).coefficient({1, 2, 0}), 1);
  EXPECT_TRUE(GradedSymPoly::variable_sum(3).pow(3).is_symmetric());
}

TEST(GradedSymPoly, EmbedAndHomogeneousPart) {
  GradedSymPoly p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 2}, 5);
  const std::vector<int> slots{2, 0};
  const GradedSymPoly e = p.embed(3, slots);
  EXPECT_EQ(e.coefficient({0, 0, 1}), 3);
  EXPECT_EQ(e.coefficient({2, 0, 1}), 5);
  EXPECT_EQ(p.homogeneous_part(3).size(), 1u);
  EXPECT_EQ(p.max_degree(), 3);
}

TEST(GradedSymPoly, DumpOrder) {
  GradedSymPoly p(2);
  p.add_term({0, 2}, make_rational(1, 2));
  p.add_term({1, 0}, -1);
  p.add_term({2, 0}, 3);
  EXPECT_EQ(p.dump(), "1,0 -> -1\n0,2 -> 1/2\n2,0 -> 3\n");
}
