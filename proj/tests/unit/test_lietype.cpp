#include <gtest/gtest.h>

#include "blockgraph/blocks.hpp"
#include "blockgraph/errors.hpp"
#include "blockgraph/lietype.hpp"
#include "blockgraph/numtheory.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace blockgraph;
using testing_support::corpus_table;

namespace {

unsigned min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
    case Family::A2: return 2;
    case Family::D2: return 4;
    default: return fixed_rank(f);
  }
}

std::vector<unsigned> sample_ranks(Family f) {
  if (fixed_rank(f) != 0) return {fixed_rank(f)};
  const unsigned r = min_rank(f);
  return {r, r + 1, r + 3};
}

// The smallest `count` q that give a valid group (and, if requested, satisfy the torus row conditions).
std::vector<LieGroup> smallest_groups(Family f, unsigned rank, std::size_t count, bool torus_row) {
  std::vector<LieGroup> out;
  for (std::uint64_t q = 2; out.size() < count && q < 100000; ++q) {
    if (nt::prime_power(q).first == 0) continue;
    try {
      LieGroup s = make_lie_group(f, rank, q);
      if (torus_row) sylow_torus_data(s);
      out.push_back(s);
    } catch (const InvalidDescriptor&) {
    } catch (const ConditionViolated&) {
    } catch (const TitsGroup&) {
    }
  }
  return out;
}

std::vector<int> signs(const FamilyData& data) {
  if (!data.eps.empty()) return data.eps;
  return std::vector<int>(data.degrees.size(), 1);
}

}  // namespace

TEST(LieType, GroupOrders) {
  EXPECT_EQ(group_order(make_lie_group(Family::A, 1, 4)).value, Integer(60));
  EXPECT_EQ(group_order(make_lie_group(Family::A, 2, 2)).value, Integer(168));
  const auto sz = group_order(make_lie_group(Family::B2_2, 0, 8));
  EXPECT_EQ(sz.value, Integer(29120));
  const std::vector<std::pair<Integer, unsigned>> want{{2, 6}, {5, 1}, {7, 1}, {13, 1}};
  EXPECT_EQ(sz.factors, want);
}

TEST(LieType, EOf) {
  EXPECT_EQ(e_of(5, 2), 4u);
  EXPECT_EQ(e_of(2, 7), 2u);
  EXPECT_EQ(e_of(3, 4), 1u);
  EXPECT_EQ(e_of(2, 5), 1u);
  EXPECT_THROW(e_of(2, 4), BadPrime);
  EXPECT_THROW(e_of(3, 9), BadPrime);
}

TEST(LieType, Zsigmondy) {
  EXPECT_FALSE(zsigmondy(2, 6).has_value());
  EXPECT_FALSE(zsigmondy(3, 2).has_value());
  EXPECT_EQ(zsigmondy(2, 4), Integer(5));
  EXPECT_EQ(zsigmondy(10, 2), Integer(11));
}

TEST(LieType, RegularNumbers) {
  EXPECT_TRUE(is_regular(Family::E8, 8, 30));
  EXPECT_FALSE(is_regular(Family::A, 4, 3));
  EXPECT_TRUE(is_regular(Family::A, 4, 5));
  EXPECT_TRUE(is_regular(Family::A, 4, 4));
  EXPECT_FALSE(is_regular(Family::E8, 8, 9));
}

TEST(LieType, Steinberg) {
  EXPECT_TRUE(steinberg_in_principal_block(make_lie_group(Family::A, 1, 7), 3));
  EXPECT_FALSE(steinberg_in_principal_block(make_lie_group(Family::A, 4, 2), 7));
  EXPECT_TRUE(steinberg_in_principal_block(make_lie_group(Family::B2_2, 0, 8), 5));
  EXPECT_THROW(steinberg_in_principal_block(make_lie_group(Family::A, 1, 7), 7), DefiningPrime);
  EXPECT_THROW(steinberg_in_principal_block(make_lie_group(Family::A, 1, 7), 5), NotADivisor);
}

TEST(LieType, Descriptors) {
  EXPECT_THROW(make_lie_group(Family::A, 1, 2), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::A, 1, 3), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::A, 1, 6), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::B, 2, 2), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::G2, 0, 2), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::A2, 2, 2), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::B2_2, 0, 2), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::B2_2, 0, 4), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::G2_2, 0, 3), InvalidDescriptor);
  EXPECT_THROW(make_lie_group(Family::F4_2, 0, 2), TitsGroup);
  EXPECT_NO_THROW(make_lie_group(Family::G2_2, 0, 27));
  EXPECT_EQ(parse_family("2B2"), Family::B2_2);
  EXPECT_EQ(parse_family("^3D4"), Family::D4_3);
  EXPECT_THROW(parse_family("H4"), InvalidDescriptor);
  for (auto f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
}

TEST(LieType, TorusRows) {
  const auto e8 = sylow_torus_data(make_lie_group(Family::E8, 0, 2));
  EXPECT_EQ(e8.e, 30u);
  EXPECT_EQ(e8.te_order, Integer(331));
  EXPECT_EQ(e8.normalizer_quotient, 30u);
  EXPECT_EQ(e8.ord_r_p, 30u);
  const auto ree = sylow_torus_data(make_lie_group(Family::G2_2, 0, 27));
  EXPECT_EQ(ree.te_order, Integer(19));
  EXPECT_EQ(ree.e, 6u);
  EXPECT_THROW(sylow_torus_data(make_lie_group(Family::A, 2, 2)), ConditionViolated);
  EXPECT_THROW(sylow_torus_data(make_lie_group(Family::F4, 0, 2)), ConditionViolated);
}

TEST(LieType, ZsigmondyPrimeOfTorus) {
  EXPECT_EQ(zsigmondy_prime_of_te(make_lie_group(Family::E8, 0, 2)), Integer(331));
  EXPECT_FALSE(zsigmondy_prime_of_te(make_lie_group(Family::A, 5, 2)).has_value());
  EXPECT_EQ(zsigmondy_prime_of_te(make_lie_group(Family::B, 2, 3)), Integer(5));
}

TEST(LieTypeProperty, OrderMatchesClosedForms) {
  for (auto f : all_families()) {
    for (unsigned rank : sample_ranks(f)) {
      const auto groups = smallest_groups(f, rank, 3, false);
      ASSERT_EQ(groups.size(), 3u) << family_name(f);
      for (const auto& s : groups) {
        const auto order = group_order(s);
        EXPECT_EQ(order.value, oracle::classical_order(f, s.rank, s.q)) << s.name();
        Integer product = 1;
        for (const auto& [prime, k] : order.factors) {
          EXPECT_TRUE(nt::is_probable_prime(prime));
          product *= nt::ipow(prime, k);
        }
        EXPECT_EQ(product, order.value) << s.name();
      }
    }
  }
}

TEST(LieTypeProperty, TorusRowIntegrity) {
  for (auto f : all_families()) {
    for (unsigned rank : sample_ranks(f)) {
      for (const auto& s : smallest_groups(f, rank, 2, true)) {
        const auto row = sylow_torus_data(s);
        const Integer order = group_order(s).value;
        EXPECT_EQ(row.torus_order % row.te_order, 0) << s.name();
        EXPECT_EQ(order % row.torus_order, 0) << s.name();
        if (auto r = zsigmondy_prime_of_te(s)) {
          const auto r64 = static_cast<std::uint64_t>(*r);
          EXPECT_EQ(row.te_order % r64, 0) << s.name();
          EXPECT_EQ(nt::multiplicative_order(s.p % r64, r64), row.ord_r_p) << s.name();
        }
      }
    }
  }
}

TEST(LieTypeProperty, OneAndTwoAlwaysRegular) {
  for (auto f : all_families()) {
    const unsigned lo = fixed_rank(f) ? fixed_rank(f) : min_rank(f);
    const unsigned hi = fixed_rank(f) ? fixed_rank(f) : 12;
    for (unsigned n = lo; n <= hi; ++n) {
      EXPECT_TRUE(is_regular(f, n, 1)) << family_name(f) << n;
      EXPECT_TRUE(is_regular(f, n, 2)) << family_name(f) << n;
    }
  }
}

TEST(LieTypeProperty, TorusColumnIsRegular) {
  for (auto f : all_families()) {
    const unsigned lo = fixed_rank(f) ? fixed_rank(f) : min_rank(f);
    const unsigned hi = fixed_rank(f) ? fixed_rank(f) : 12;
    for (unsigned n = lo; n <= hi; ++n) {
      const auto groups = smallest_groups(f, n, 1, true);
      ASSERT_FALSE(groups.empty()) << family_name(f) << n;
      EXPECT_TRUE(is_regular(f, n, sylow_torus_data(groups[0]).e)) << family_name(f) << n;
    }
  }
}

TEST(LieTypeProperty, RegularNumbersMatchEigenvalueCriterion) {
  for (auto f : all_families()) {
    if (f == Family::D4_3 || f == Family::B2_2 || f == Family::F4_2 || f == Family::G2_2) continue;
    const unsigned lo = fixed_rank(f) ? fixed_rank(f) : min_rank(f);
    const unsigned hi = fixed_rank(f) ? fixed_rank(f) : 12;
    for (unsigned n = lo; n <= hi; ++n) {
      const auto data = family_data(f, n);
      for (std::uint64_t e = 1; e <= 64; ++e) {
        EXPECT_EQ(is_regular(f, n, e), oracle::regular_by_eigenvalues(data.degrees, signs(data), e))
            << family_name(f) << n << " e=" << e;
      }
    }
  }
}

TEST(LieTypeProperty, ZsigmondyMatchesScan) {
  for (std::uint64_t t = 2; t <= 12; ++t) {
    for (std::uint64_t n = 2; n <= 12; ++n) {
      const auto got = zsigmondy(t, n);
      const auto want = oracle::zsigmondy_scan(t, n);
      ASSERT_EQ(got.has_value(), want.has_value()) << t << "^" << n;
      if (got) EXPECT_EQ(*got, Integer(*want)) << t << "^" << n;
      const bool exception = (t == 2 && n == 6) || (n == 2 && ((t + 1) & t) == 0);
      EXPECT_EQ(!got.has_value(), exception) << t << "^" << n;
    }
  }
}

TEST(LieTypeProperty, SteinbergPredicateMatchesBlocks) {
  struct Case {
    const char* table;
    Family family;
    unsigned rank;
    std::uint64_t q;
  };
  for (const auto& c : std::vector<Case>{{"L2(7)", Family::A, 1, 7},
                                         {"L2(7)", Family::A, 2, 2},
                                         {"L2(11)", Family::A, 1, 11},
                                         {"A5", Family::A, 1, 4},
                                         {"A5", Family::A, 1, 5},
                                         {"A6", Family::A, 1, 9},
                                         {"Sz(8)", Family::B2_2, 0, 8},
                                         {"L5(2)", Family::A, 4, 2}}) {
    const auto& t = corpus_table(c.table);
    const auto s = make_lie_group(c.family, c.rank, c.q);
    const auto st = oracle::rows_of_full_p_degree(t, s.p);
    ASSERT_EQ(st.size(), 1u) << c.table;
    for (auto ell : prime_divisors(t)) {
      if (ell == s.p) continue;
      const auto b0 = principal_block_rows(t, ell);
      const bool in_b0 = std::find(b0.begin(), b0.end(), st[0]) != b0.end();
      EXPECT_EQ(steinberg_in_principal_block(s, ell), in_b0) << s.name() << " ell=" << ell;
    }
  }
}
