#include "tau/identities.hpp"

#include <gtest/gtest.h>

using namespace tau;

namespace {

IdentityParams params(int g, std::vector<int> d, std::optional<int> K = std::nullopt) {
  IdentityParams p;
  p.genus = g;
  p.d = std::move(d);
  p.K = K;
  return p;
}

}  // namespace

TEST(AltPairSum, Examples) {
  TauEngine engine;
  const std::vector<int> d1{1};
  const std::vector<int> d000{0, 0, 0};
  const std::vector<int> d2{2};
  EXPECT_EQ(alt_pair_sum(engine, 1, 1, d1), make_rational(1, 12));
  EXPECT_EQ(alt_pair_sum(engine, 1, 0, d000), 0);
  EXPECT_EQ(alt_pair_sum(engine, 2, 2, d2), make_rational(1, 240));
}

TEST(SplitSum, UnstableFactorsVanish) {
  TauEngine engine;
  const std::vector<int> d{0};
  EXPECT_EQ(split_sum(engine, 0, {}, {}, 1, d), 0);
}

// Brute force over subsets, genus splits and j.
TEST(SplitSum, MatchesBruteForce) {
  TauEngine engine;
  const std::vector<int> d{1, 2, 0};
  const int g = 2;
  const int top = 2;
  Rational expected = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    for (int h = 0; h <= g; ++h) {
      for (int j = 0; j <= top; ++j) {
        std::vector<int> left{j};
        std::vector<int> right{top - j};
        for (int i = 0; i < 3; ++i) ((mask >> i) & 1 ? left : right).push_back(d[i]);
        const Rational term = engine.bracket(h, left) * engine.bracket(g - h, right);
        expected += j % 2 ? -term : term;
      }
    }
  }
  EXPECT_EQ(split_sum(engine, top, {}, {}, g, d), expected);
}

TEST(Verify, Examples) {
  TauEngine engine;
  const Report eq4 = verify(engine, IdentityId::eq4, params(1, {1}));
  EXPECT_TRUE(eq4.pass);
  EXPECT_EQ(eq4.lhs, make_rational(1, 12));

  const Report eq5 = verify(engine, IdentityId::eq5, params(1, {0}));
  EXPECT_TRUE(eq5.pass);
  EXPECT_EQ(eq5.lhs, make_rational(1, 24));
  EXPECT_EQ(eq5.rhs, make_rational(1, 24));

  const Report eq6 = verify(engine, IdentityId::eq6, params(0, {0, 0, 0}, 1));
  EXPECT_TRUE(eq6.pass);
  EXPECT_EQ(eq6.lhs, 0);
}

TEST(Verify, ConstraintViolationsRejected) {
  TauEngine engine;
  EXPECT_THROW(verify(engine, IdentityId::eq4, params(2, {0, 2})), ConstraintError);
  EXPECT_THROW(verify(engine, IdentityId::eq4, params(2, {1})), ConstraintError);
  EXPECT_THROW(verify(engine, IdentityId::eq6, params(1, {0}, 1)), ConstraintError);
  EXPECT_THROW(verify(engine, IdentityId::eq6, params(1, {0})), ConstraintError);
  EXPECT_THROW(verify(engine, IdentityId::eq5, params(0, {0, 0})), ConstraintError);
  EXPECT_THROW(verify(engine, IdentityId::eq4, params(1, {1}, 2)), ConstraintError);
}

TEST(Decomposition, Examples) {
  TauEngine engine;
  EXPECT_TRUE(decomposition_check(engine, 2, std::vector<int>{1}).pass);
  EXPECT_TRUE(decomposition_check(engine, 3, std::vector<int>{2}).pass);
  EXPECT_TRUE(decomposition_check(engine, 3, std::vector<int>{1, 2}).pass);
  EXPECT_THROW(decomposition_check(engine, 3, std::vector<int>{1, 1}), ConstraintError);
}

TEST(N1Sums, SmallGenera) {
  TauEngine engine;
  const N1Sums g1 = n1_proof_sums(engine, 1);
  EXPECT_EQ(g1.with_tau0_shifted, make_rational(1, 12));
  EXPECT_EQ(g1.with_tau0, make_rational(1, 12));
  EXPECT_EQ(g1.two_point, make_rational(1, 24));
  const N1Sums g2 = n1_proof_sums(engine, 2);
  EXPECT_EQ(g2.with_tau0_shifted, make_rational(1, 120));
  EXPECT_EQ(g2.with_tau0, make_rational(1, 240));
  EXPECT_EQ(g2.two_point, make_rational(1, 1152));
  const N1Sums g3 = n1_proof_sums(engine, 3);
  EXPECT_EQ(g3.with_tau0_shifted, make_rational(6 * 3, 5040 * 8));
  EXPECT_EQ(g3.with_tau0, make_rational(6, 5040 * 8));
  EXPECT_EQ(g3.two_point, make_rational(1, 82944));
}

// Appending tau_1 keeps both sides of a passing instance in balance.
TEST(Verify, StringDilatonCompatibility) {
  TauEngine engine;
  for (IdentityId id : {IdentityId::eq4, IdentityId::eq5, IdentityId::eq8}) {
    SweepBounds b;
    b.gmax = 5;
    b.nmax = 3;
    for (const IdentityParams& p : sweep_params(id, b).cases) {
      ASSERT_TRUE(verify(engine, id, p).pass);
      IdentityParams q = p;
      q.d.push_back(1);
      EXPECT_TRUE(verify(engine, id, q).pass) << identity_name(id) << ' ' << to_json(q).dump();
    }
  }
}

// eq7 is eq5 with 2g replaced by 2K and a zero constant.
TEST(Verify, ComplementSharesTheSumEvaluator) {
  TauEngine engine;
  const std::vector<int> d{0, 0, 1};
  const int g = 2;
  const int K = 3;
  const Report r = verify(engine, IdentityId::eq7, params(g, d, K));
  std::vector<int> with_top = d;
  with_top.push_back(2 * K);
  EXPECT_EQ(r.lhs, engine.bracket(g, with_top));
  EXPECT_EQ(r.rhs, shifted_sum(engine, 2 * K - 1, g, d) - make_rational(1, 2) * split_sum(engine, 2 * K - 2, {}, {}, g, d));
  EXPECT_TRUE(r.pass);
}

TEST(Sweep, AllIdentitiesPassOnSmallGrid) {
  TauEngine engine;
  SweepBounds b;
  b.gmax = 3;
  b.nmax = 3;
  for (IdentityId id : all_identities()) {
    const auto reports = verify_sweep(engine, id, b, 2);
    EXPECT_FALSE(reports.empty()) << identity_name(id);
    EXPECT_EQ(count_passed(reports), reports.size()) << identity_name(id);
  }
}

TEST(Sweep, DeterministicUnderJobs) {
  SweepBounds b;
  b.gmax = 4;
  b.nmax = 3;
  TauEngine one;
  TauEngine many;
  EXPECT_EQ(render_sweep(verify_sweep(one, IdentityId::c33a, b, 1), false),
            render_sweep(verify_sweep(many, IdentityId::c33a, b, 4), false));
}

TEST(Identity, NamesRoundTrip) {
  for (IdentityId id : all_identities()) EXPECT_EQ(parse_identity(identity_name(id)), id);
  EXPECT_FALSE(parse_identity("eq9").has_value());
}
