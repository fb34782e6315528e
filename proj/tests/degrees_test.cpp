#include <gtest/gtest.h>

#include "zmdeg/check.hpp"
#include "zmdeg/degrees.hpp"

namespace zmdeg {
namespace {

ExactRatio q(long num, long den) { return ExactRatio(num, den); }

TEST(ExactRatio, ReducedAndFormatted) {
  EXPECT_EQ(q(142, 256).str(), "71/128");
  EXPECT_EQ(q(72, 144).str(), "1/2");
  EXPECT_EQ(ExactRatio(1).str(), "1/1");
  EXPECT_EQ(q(-6, 4).str(), "-3/2");
  EXPECT_EQ(q(13, 19).decimal(), "0.684211");
  EXPECT_EQ(q(1, 1).decimal(), "1.000000");
  EXPECT_EQ(ExactRatio::parse("26/38"), q(13, 19));
  EXPECT_EQ(ExactRatio::parse("7"), ExactRatio(7));
  EXPECT_THROW(ExactRatio(1, 0), std::domain_error);
  EXPECT_THROW(ExactRatio::parse("x/2"), std::invalid_argument);
  EXPECT_LT(q(1, 3), q(1, 2));
}

TEST(Theorems, PublishedValues) {
  const auto params = validate(9, 4, 8);
  EXPECT_EQ(f2(params), 85);
  EXPECT_EQ(cf2(params), 36);
  EXPECT_EQ(sd(params), q(13, 19));
  EXPECT_EQ(csd(params), q(17, 25));
}

TEST(Theorems, TrivialGroup) {
  const auto params = validate(1, 1, 1);
  EXPECT_EQ(f2(params), 1);
  EXPECT_EQ(cf2(params), 1);
  EXPECT_EQ(sd(params), ExactRatio(1));
  EXPECT_EQ(csd(params), ExactRatio(1));
}

TEST(Theorems, SymmetricGroupS3) {
  const auto params = validate(3, 2, 2);
  EXPECT_EQ(f2(params), 17);
  EXPECT_EQ(cf2(params), 6);
  EXPECT_EQ(sd(params), q(5, 6));
  EXPECT_EQ(csd(params), q(19, 25));
}

TEST(LocalCounts, Examples) {
  const auto big = validate(9, 4, 8);
  EXPECT_EQ(f_local(big, 9, 4), 1);
  EXPECT_EQ(f_local(big, 1, 1), 85);
  EXPECT_EQ(cf_local(big, 9, 4), 1);
  EXPECT_EQ(cf_local(big, 1, 1), 36);

  const auto s3 = validate(3, 2, 2);
  EXPECT_EQ(f_local(s3, 3, 1), 3);
  EXPECT_EQ(cf_local(s3, 1, 2), 3);
  EXPECT_THROW(f_local(s3, 9, 1), std::invalid_argument);
}

TEST(LocalCounts, WholeGroupEqualsGlobal) {
  for (const auto& params : valid_triples(150)) {
    const ClassLattice lattice(params);
    ASSERT_EQ(f_local(lattice, 1, 1), f2(lattice)) << params.str();
    ASSERT_EQ(cf_local(lattice, 1, 1), cf2(lattice)) << params.str();
  }
}

TEST(LocalCounts, WeightedFormAgreesWhenRatiosDivide) {
  const ClassLattice lattice(validate(9, 4, 8));
  for (const auto& m1 : lattice.m_divisors) {
    for (const auto& n1 : lattice.n_divisors) {
      EXPECT_EQ(f_local_weighted(lattice, m1, n1), f_local(lattice, m1, n1));
      EXPECT_EQ(cf_local_weighted(lattice, m1, n1), cf_local(lattice, m1, n1));
    }
  }
}

TEST(LocalCounts, WeightedFormFractionalForZM_15_4_2) {
  const ClassLattice lattice(validate(15, 4, 2));
  // [H(3,1,0)] has 3 members and [H(15,2,0)] has 5; each H(3,1,s) contains
  // all five order-2 subgroups, not 5/3 of them.
  EXPECT_EQ(lattice.sizes[lattice.m_index(3)][lattice.n_index(1)], 3);
  EXPECT_EQ(lattice.sizes[lattice.m_index(15)][lattice.n_index(2)], 5);
  EXPECT_THROW(f_local_weighted(lattice, 3, 1), IntegralityViolation);
  EXPECT_THROW(cf_local_weighted(lattice, 15, 1), IntegralityViolation);
  EXPECT_NO_THROW(f_local(lattice, 3, 1));
}

TEST(Aggregation, PermutingPairCountsAreIntegers) {
  for (const auto& params : valid_triples(150)) {
    const auto report = make_report(params);
    const ExactRatio pairs = report.sd * ExactRatio(report.subgroup_count * report.subgroup_count);
    const ExactRatio cyclic_pairs = report.csd * ExactRatio(report.cyclic_subgroup_count * report.cyclic_subgroup_count);
    ASSERT_TRUE(pairs.is_integer()) << params.str();
    ASSERT_TRUE(cyclic_pairs.is_integer()) << params.str();

    const ClassLattice lattice(params);
    Natural weighted = 0;
    for (std::size_t i = 0; i < lattice.m_divisors.size(); ++i) {
      for (std::size_t j = 0; j < lattice.n_divisors.size(); ++j) {
        weighted += lattice.sizes[i][j] * f_local(lattice, lattice.m_divisors[i], lattice.n_divisors[j]);
      }
    }
    ASSERT_EQ(ExactRatio(weighted), pairs) << params.str();
  }
}

TEST(Range, DegreesInUnitInterval) {
  const ExactRatio zero(0), one(1);
  for (const auto& params : valid_triples(150)) {
    const auto report = make_report(params);
    ASSERT_GT(report.sd, zero);
    ASSERT_LE(report.sd, one);
    ASSERT_GT(report.csd, zero);
    ASSERT_LE(report.csd, one);
    if (params.m() == 1 || params.n() == 1) {
      ASSERT_EQ(report.sd, one) << params.str();
      ASSERT_EQ(report.csd, one) << params.str();
    }
  }
}

TEST(NPrime, ClosedForms) {
  EXPECT_EQ(sd_n_prime(3), q(5, 6));
  EXPECT_EQ(sd_n_prime(9), q(71, 128));
  EXPECT_EQ(sd_n_prime(1), ExactRatio(1));
  EXPECT_EQ(csd_n_prime(3), q(19, 25));
  EXPECT_EQ(csd_n_prime(9), q(1, 2));
  EXPECT_EQ(csd_n_prime(1), ExactRatio(1));
  EXPECT_THROW(sd_n_prime(4), std::invalid_argument);
  EXPECT_THROW(csd_n_prime(0), std::invalid_argument);
}

TEST(NPrime, FastPathAgreesForEveryPrimeN) {
  std::size_t checked = 0;
  for (const auto& params : valid_triples(150)) {
    if (!is_prime(params.n())) continue;
    ASSERT_EQ(sd(params), sd_n_prime(params.m())) << params.str();
    ASSERT_EQ(csd(params), csd_n_prime(params.m())) << params.str();
    ++checked;
  }
  EXPECT_GT(checked, 50U);
}

TEST(NPrime, IndependentOfNAndR) {
  // m = 7: n = 2 (r = 6) and n = 3 (r = 2, 4).
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 6}, {3, 2}, {3, 4}}) {
    EXPECT_EQ(sd(validate(7, n, r)), sd_n_prime(7));
    EXPECT_EQ(csd(validate(7, n, r)), csd_n_prime(7));
  }
}

TEST(Asymptote, FirstRows) {
  const auto rows = asymptotic_sweep(3, 2);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].alpha, 1U);
  EXPECT_EQ(rows[0].sd, q(5, 6));
  EXPECT_EQ(rows[0].csd, q(19, 25));
  EXPECT_EQ(rows[1].sd, q(71, 128));
  EXPECT_EQ(rows[1].csd, q(1, 2));
}

TEST(Asymptote, StrictlyDecreasingAndSmall) {
  for (unsigned p : {3U, 5U, 7U}) {
    const auto rows = asymptotic_sweep(p, 8);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ASSERT_LT(rows[i].sd, rows[i - 1].sd) << p << " " << i;
      ASSERT_LT(rows[i].csd, rows[i - 1].csd) << p << " " << i;
    }
  }
  EXPECT_LT(asymptotic_sweep(3, 8).back().sd, q(1, 10));
}

TEST(Asymptote, RejectsBadPrime) {
  EXPECT_THROW(asymptotic_sweep(2, 3), std::invalid_argument);
  EXPECT_THROW(asymptotic_sweep(9, 3), std::invalid_argument);
  EXPECT_THROW(asymptotic_sweep(3, 0), std::invalid_argument);
}

TEST(Asymptote, LargeExponentStaysExact) {
  const auto rows = asymptotic_sweep(3, 40);
  EXPECT_LT(rows.back().sd, q(1, 1000000));
  EXPECT_LT(rows.back().csd, q(1, 1000000));
}

}  // namespace
}  // namespace zmdeg
