#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "quasicount/errors.hpp"
#include "quasicount/oracle.hpp"
#include "quasicount/signatures.hpp"

using namespace quasicount;

TEST(Signature, StoresSortedPeriods) {
  const Signature s(8, 2, 8);
  EXPECT_EQ(s.periods(), (std::array<u64, 3>{2, 8, 8}));
  EXPECT_EQ(s.to_string(), "(2,8,8)");
  EXPECT_EQ(s.distinct_count(), 2);
  EXPECT_EQ(Signature(3, 2, 1), Signature(1, 2, 3));
  EXPECT_THROW(Signature(0, 2, 3), DomainError);
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(7, Signature(7, 7, 7)));
  EXPECT_FALSE(is_admissible(8, Signature(8, 8, 8)));
  EXPECT_FALSE(is_admissible(6, Signature(2, 3, 6)));
  EXPECT_TRUE(satisfies_harvey(6, Signature(2, 3, 6)));
  EXPECT_TRUE(is_admissible(8, Signature(4, 8, 8)));
  EXPECT_TRUE(is_admissible(5, Signature(5, 5, 5)));
  EXPECT_FALSE(is_admissible(3, Signature(3, 3, 3)));
  EXPECT_TRUE(satisfies_harvey(3, Signature(3, 3, 3)));
  EXPECT_FALSE(is_admissible(4, Signature(2, 4, 4)));
  EXPECT_FALSE(is_admissible(7, Signature(1, 7, 7)));
  EXPECT_FALSE(is_admissible(1, Signature(1, 1, 1)));
}

TEST(Admissible, PermutationInsensitive) {
  for (u64 n : {8u, 12u, 30u, 35u, 60u}) {
    const auto divs = divisors(n);
    for (u64 a : divs) {
      for (u64 b : divs) {
        for (u64 c : divs) {
          EXPECT_EQ(is_admissible(n, Signature(a, b, c)), is_admissible(n, Signature(c, a, b)));
          EXPECT_EQ(is_admissible(n, Signature(a, b, c)), is_admissible(n, Signature(b, a, c)));
        }
      }
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_signatures(7), (std::vector<Signature>{Signature(7, 7, 7)}));
  EXPECT_EQ(enumerate_signatures(8), (std::vector<Signature>{Signature(2, 8, 8), Signature(4, 8, 8)}));
  EXPECT_TRUE(enumerate_signatures(4).empty());
  EXPECT_TRUE(enumerate_signatures(3).empty());
  EXPECT_TRUE(enumerate_signatures(1).empty());
  EXPECT_EQ(enumerate_signatures(5), (std::vector<Signature>{Signature(5, 5, 5)}));
  EXPECT_EQ(enumerate_signatures(6), (std::vector<Signature>{Signature(3, 6, 6)}));
}

TEST(Enumerate, MatchesFilteredDivisorTriples) {
  for (u64 n : {50u, 360u, 2310u, 4096u}) {
    const auto divs = divisors(n);
    std::vector<Signature> expected;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      for (std::size_t j = i; j < divs.size(); ++j) {
        for (std::size_t k = j; k < divs.size(); ++k) {
          const Signature s(divs[i], divs[j], divs[k]);
          if (is_admissible(n, s)) expected.push_back(s);
        }
      }
    }
    EXPECT_EQ(enumerate_signatures(n), expected) << n;
  }
}

TEST(Enumerate, PropertiesUpTo2000) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto sigs = enumerate_signatures(n);
    EXPECT_TRUE(std::is_sorted(sigs.begin(), sigs.end()));
    EXPECT_EQ(std::set<Signature>(sigs.begin(), sigs.end()).size(), sigs.size());
    EXPECT_EQ(sigs, enumerate_signatures(n));
    const unsigned v2 = valuation(2, n);
    for (const auto& s : sigs) {
      const auto& p = s.periods();
      EXPECT_EQ(std::lcm(p[0], p[1]), n);
      EXPECT_EQ(std::lcm(p[0], p[2]), n);
      EXPECT_EQ(std::lcm(p[1], p[2]), n);
      if (n % 2 == 0) {
        const u64 top = u64{1} << v2;
        const int count = (p[0] % top == 0) + (p[1] % top == 0) + (p[2] % top == 0);
        EXPECT_EQ(count % 2, 0) << n << " " << s.to_string();
      }
      EXPECT_GE(genus(n, s), 2u);
    }
  }
}

TEST(Enumerate, PrimesHaveOnlyTheAllEqualSignature) {
  for (u64 p = 5; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    EXPECT_EQ(enumerate_signatures(p), (std::vector<Signature>{Signature(p, p, p)}));
  }
}

TEST(Enumerate, MatchesSignaturesRealizedByGeneratingTriples) {
  for (u64 n = 2; n <= 150; ++n) {
    EXPECT_EQ(enumerate_signatures(n), oracle::realized_signatures(n)) << n;
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(7, Signature(7, 7, 7)), 3u);
  EXPECT_EQ(genus(8, Signature(2, 8, 8)), 2u);
  EXPECT_EQ(genus(8, Signature(4, 8, 8)), 3u);
  EXPECT_EQ(genus(5, Signature(5, 5, 5)), 2u);
  EXPECT_THROW(genus(8, Signature(8, 8, 8)), DomainError);
}
