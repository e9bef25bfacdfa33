#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "quasicount/actions.hpp"
#include "quasicount/errors.hpp"
#include "quasicount/lloyd.hpp"

using namespace quasicount;

namespace {

// Orbits of k-tuples of nonzero residues mod p summing to zero, under unit
// scaling and reordering.
u64 tuple_orbits(u64 p, std::size_t k) {
  std::set<std::vector<u64>> seen;
  std::vector<u64> t(k, 1);
  while (true) {
    u64 partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) partial += t[i];
    const u64 last = (p - partial % p) % p;
    if (last != 0) {
      t[k - 1] = last;
      std::vector<u64> best;
      for (u64 u = 1; u < p; ++u) {
        std::vector<u64> s(t);
        for (auto& x : s) x = x * u % p;
        std::sort(s.begin(), s.end());
        if (best.empty() || s < best) best = s;
      }
      seen.insert(best);
    }
    std::size_t i = 0;
    while (i + 1 < k && t[i] == p - 1) t[i++] = 1;
    if (i + 1 == k) break;
    ++t[i];
  }
  return seen.size();
}

}  // namespace

TEST(PowerSeries, GeometricInverse) {
  const auto one = PowerSeries::constant(10, 1);
  const auto one_minus_x = one - PowerSeries::monomial(10, 1);
  EXPECT_EQ(one_minus_x * one_minus_x.reciprocal(), one);
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(one_minus_x.reciprocal()[i], Rational(1));
}

TEST(PowerSeries, PowAndSubstitution) {
  const auto one = PowerSeries::constant(12, 1);
  const auto g = (one - PowerSeries::monomial(12, 1)).reciprocal();
  // (1-x)^-2 has coefficients k+1.
  for (std::size_t i = 0; i <= 12; ++i) EXPECT_EQ(g.pow(2)[i], Rational(Integer(i + 1)));
  // Substituting x^3 into (1-x)^-1 gives (1-x^3)^-1.
  EXPECT_EQ(g.substitute_power(3), (one - PowerSeries::monomial(12, 3)).reciprocal());
  EXPECT_EQ(g.pow(0), one);
  EXPECT_THROW(PowerSeries::monomial(5, 1).reciprocal(), DomainError);
  EXPECT_THROW(one + PowerSeries::constant(4, 1), DomainError);
}

TEST(Lloyd, CubicCoefficientExamples) {
  EXPECT_EQ(lloyd_coefficient(5, 3), Rational(1));
  EXPECT_EQ(lloyd_coefficient(7, 3), Rational(2));
  EXPECT_EQ(lloyd_coefficient(13, 3), Rational(3));
}

TEST(Lloyd, CubicCoefficientIsQcForPrimes) {
  for (u64 p = 5; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    EXPECT_EQ(lloyd_coefficient(p, 3), Rational(qc_sum(p))) << p;
  }
}

// For p = 3 the cubic coefficient counts the (3,3,3) torus action, which QC excludes.
TEST(Lloyd, PrimeThreeCountsTheTorus) {
  EXPECT_EQ(lloyd_coefficient(3, 3), Rational(1));
  EXPECT_EQ(qc_sum(3), 0);
}

TEST(Lloyd, QuarticCoefficientForEleven) {
  EXPECT_EQ(tuple_orbits(11, 4), 8u);
  EXPECT_EQ(lloyd_coefficient(11, 4), Rational(8));
}

TEST(Lloyd, HigherCoefficientsMatchTupleOrbits) {
  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    const auto s = lloyd_series(p, 5);
    for (std::size_t k = 3; k <= 5; ++k) EXPECT_EQ(s[k], Rational(Integer(tuple_orbits(p, k)))) << p << " " << k;
  }
}

TEST(Lloyd, LowOrderCoefficients) {
  for (u64 p = 3; p <= 50; p += 2) {
    if (!is_prime(p)) continue;
    const auto s = lloyd_series(p, 3);
    EXPECT_EQ(s[0], Rational(1)) << p;
    EXPECT_EQ(s[1], Rational(0)) << p;
    EXPECT_EQ(s[2], Rational(1)) << p;
  }
}

TEST(Lloyd, CoefficientsAreNonnegativeIntegers) {
  for (u64 p : {3u, 5u, 7u, 11u, 13u, 31u}) {
    const auto s = lloyd_series(p, 12);
    for (std::size_t k = 3; k <= 12; ++k) {
      EXPECT_TRUE(is_integral(s[k])) << p << " " << k;
      EXPECT_GE(s[k], 0);
    }
  }
}

TEST(Lloyd, RejectsBadInput) {
  EXPECT_THROW(lloyd_series(9, 3), DomainError);
  EXPECT_THROW(lloyd_series(2, 3), DomainError);
  EXPECT_THROW(lloyd_coefficient(7, 2), DomainError);
}
