#include <gtest/gtest.h>

#include <random>

#include "blockgraph/errors.hpp"
#include "blockgraph/finite_field.hpp"
#include "oracles.hpp"

using namespace blockgraph;

TEST(Reduction, QuadraticOverTwo) {
  const auto ctx = ReductionContext::make(6, 2);
  EXPECT_EQ(ctx.m_prime(), 3u);
  EXPECT_EQ(ctx.degree(), 2u);
  EXPECT_EQ(ctx.modulus(), (ReductionContext::Poly{1, 1, 1}));
  EXPECT_EQ(ctx.reduce(E(3)), ctx.root());
  EXPECT_EQ(ctx.root().coeffs, (std::vector<std::uint64_t>{0, 1}));
}

TEST(Reduction, PurePowerOfP) {
  const auto ctx = ReductionContext::make(4, 2);
  EXPECT_EQ(ctx.m_prime(), 1u);
  EXPECT_EQ(ctx.degree(), 1u);
  EXPECT_EQ(ctx.reduce(E(4)), ctx.one());
  EXPECT_EQ(ctx.reduce(E(4) + 1), ctx.zero());
}

TEST(Reduction, RationalResidue) {
  const auto ctx = ReductionContext::make(1, 3);
  EXPECT_EQ(ctx.reduce(Cyclotomic(5)).coeffs, std::vector<std::uint64_t>{2});
  EXPECT_EQ(ctx.reduce(Cyclotomic(-1)).coeffs, std::vector<std::uint64_t>{2});
}

TEST(Reduction, FifteenOverTwoFactors) {
  const auto expected = oracle::divisors_mod_p(oracle::cyclotomic_numeric(15), 2, 4);
  ASSERT_EQ(expected.size(), 2u);
  auto factors = ReductionContext::irreducible_factors(15, 2);
  auto sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(sorted, want);
  const auto ctx = ReductionContext::make(15, 2);
  EXPECT_EQ(ctx.degree(), 4u);
  EXPECT_TRUE(ctx.modulus() == expected[0] || ctx.modulus() == expected[1]);
}

TEST(Reduction, GoldenRatioRelation) {
  for (const auto& f : ReductionContext::irreducible_factors(15, 2)) {
    const ReductionContext ctx(15, 2, f);
    const auto z = ctx.reduce(E(5) + Cyclotomic::root_of_unity(5, 4));
    EXPECT_EQ(ctx.mul(z, z), ctx.add(z, ctx.one()));
  }
}

TEST(Reduction, ConductorMismatch) {
  const auto ctx = ReductionContext::make(6, 2);
  EXPECT_THROW(ctx.reduce(E(5)), ConductorMismatch);
}

TEST(Reduction, RejectsForeignModulus) {
  EXPECT_THROW(ReductionContext(15, 2, {1, 1, 1}), InvalidArgument);
  EXPECT_THROW(ReductionContext(15, 2, {1, 1, 0, 0, 0, 1}), InvalidArgument);
}

TEST(Reduction, FactorsMatchBruteForce) {
  for (auto [m, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 2}, {21, 2}, {13, 3}, {20, 3}, {11, 5}, {24, 7}}) {
    const auto k = ReductionContext::make(m, p).degree();
    auto want = oracle::divisors_mod_p(oracle::cyclotomic_numeric(m), p, static_cast<unsigned>(k));
    auto got = ReductionContext::irreducible_factors(m, p);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want) << m << " mod " << p;
  }
}

TEST(ReductionProperty, IsRingHomomorphism) {
  std::mt19937_64 rng(3);
  for (auto [m, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{15, 2}, {60, 2}, {60, 3}, {60, 5}, {42, 7}, {35, 3}}) {
    for (const auto& f : ReductionContext::irreducible_factors(m, p)) {
      const ReductionContext ctx(m, p, f);
      for (int trial = 0; trial < 40; ++trial) {
        auto pick = [&] {
          std::vector<Cyclotomic::Term> terms;
          for (int i = 0; i < 4; ++i) terms.push_back({static_cast<std::int64_t>(rng() % m), static_cast<int>(rng() % 11) - 5});
          return cyc_make(m, terms);
        };
        const Cyclotomic a = pick();
        const Cyclotomic b = pick();
        EXPECT_EQ(ctx.reduce(a * b), ctx.mul(ctx.reduce(a), ctx.reduce(b)));
        EXPECT_EQ(ctx.reduce(a + b), ctx.add(ctx.reduce(a), ctx.reduce(b)));
      }
    }
  }
}
