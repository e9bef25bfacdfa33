#include <gtest/gtest.h>

#include "quasicount/actions.hpp"
#include "quasicount/errors.hpp"

using namespace quasicount;

namespace {

const std::vector<int> kFirstForty = {0, 0, 0, 0, 1, 1, 2, 3, 2, 3, 2, 5, 3, 4,  5, 5, 3, 6, 4,  7,
                                      7, 6, 4, 11, 5, 7, 6, 9, 5, 13, 6, 9, 9, 9, 9, 13, 7, 10, 11, 15};

bool in_closed_domain(u64 n) { return n % 2 == 0 ? n >= 8 : n >= 5; }

}  // namespace

TEST(TValue, WorkedExamples) {
  const auto t777 = t_value(7, Signature(7, 7, 7));
  EXPECT_EQ(t777.value, 2);
  EXPECT_EQ(t777.case_tag, SignatureCase::AllEqual);
  EXPECT_EQ(t777.tau2_term, 2u);
  EXPECT_FALSE(t777.tau1_term);
  EXPECT_EQ(t777.phi_term, 6u);
  EXPECT_EQ(t777.w_primes, (std::vector<u64>{7}));
  EXPECT_EQ(t777.product_term, make_rational(5, 6));

  const auto t288 = t_value(8, Signature(2, 8, 8));
  EXPECT_EQ(t288.value, 1);
  EXPECT_EQ(t288.case_tag, SignatureCase::TwoEqual);
  EXPECT_EQ(t288.tau1_term, 1u);
  EXPECT_TRUE(t288.w_primes.empty());

  EXPECT_EQ(t_value(8, Signature(4, 8, 8)).value, 2);
  EXPECT_EQ(t_value(6, Signature(3, 6, 6)).value, 1);
}

TEST(TValue, RejectsInadmissible) {
  EXPECT_THROW(t_value(8, Signature(8, 8, 8)), DomainError);
  EXPECT_THROW(t_value(6, Signature(2, 3, 6)), DomainError);
}

TEST(TValue, CaseTagMatchesMultiplicities) {
  for (u64 n = 2; n <= 600; ++n) {
    for (const auto& s : enumerate_signatures(n)) {
      const auto t = t_value(n, s);
      switch (s.distinct_count()) {
        case 3: EXPECT_EQ(t.case_tag, SignatureCase::AllDistinct); break;
        case 2: EXPECT_EQ(t.case_tag, SignatureCase::TwoEqual); break;
        default: EXPECT_EQ(t.case_tag, SignatureCase::AllEqual); break;
      }
      EXPECT_EQ(t.tau1_term.has_value(), t.case_tag == SignatureCase::TwoEqual);
      EXPECT_EQ(t.tau2_term.has_value(), t.case_tag == SignatureCase::AllEqual);
      for (u64 p : t.w_primes) EXPECT_NE(p, 2u) << n << " " << s.to_string();
      EXPECT_GE(t.value, 0);
    }
  }
}

TEST(QcSum, FirstFortyTable) {
  for (u64 n = 1; n <= 40; ++n) EXPECT_EQ(qc_sum(n), kFirstForty[n - 1]) << n;
}

TEST(QcSum, Examples) {
  EXPECT_EQ(qc_sum(7), 2);
  EXPECT_EQ(qc_sum(1), 0);
  EXPECT_EQ(qc_sum(30), 13);
  EXPECT_EQ(qc_sum(40), 15);
}

TEST(QcClosed, Examples) {
  EXPECT_EQ(qc_closed(8), Integer(3));
  EXPECT_EQ(qc_closed(9), Integer(2));
  EXPECT_EQ(qc_closed(35), Integer(9));
  for (u64 n : {1u, 2u, 3u, 4u, 6u}) EXPECT_FALSE(qc_closed(n)) << n;
  EXPECT_TRUE(qc_closed(5));
}

TEST(QcClosed, MatchesSumUpTo2000) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto closed = qc_closed(n);
    ASSERT_EQ(closed.has_value(), in_closed_domain(n)) << n;
    if (closed) ASSERT_EQ(*closed, qc_sum(n)) << n;
  }
}

TEST(QcClosed, LargeInputsStayExact) {
  // 2^29 and a product of the first nine primes, both near the CLI limit.
  EXPECT_EQ(qc_closed(536870912), qc_sum(536870912));
  EXPECT_EQ(qc_closed(223092870), qc_sum(223092870));
}

TEST(QcUnified, Examples) {
  const auto u8 = qc_unified(8);
  ASSERT_TRUE(u8);
  EXPECT_EQ(u8->constant, Rational(1));
  EXPECT_EQ(u8->value, 3);
  const auto u35 = qc_unified(35);
  ASSERT_TRUE(u35);
  EXPECT_EQ(u35->constant, make_rational(1, 2));
  EXPECT_EQ(u35->value, 9);
  const auto u49 = qc_unified(49);
  ASSERT_TRUE(u49);
  EXPECT_EQ(u49->constant, make_rational(5, 6));
  EXPECT_EQ(u49->value, 10);
  EXPECT_EQ(qc_sum(49), 10);
  EXPECT_FALSE(qc_unified(6));
}

TEST(QcUnified, AgreesWithClosedForm) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto closed = qc_closed(n);
    const auto unified = qc_unified(n);
    ASSERT_EQ(closed.has_value(), unified.has_value()) << n;
    if (closed) EXPECT_EQ(unified->value, *closed) << n;
  }
}

TEST(RCyclic, Examples) {
  EXPECT_EQ(r_cyclic(7), 8);
  EXPECT_EQ(r_cyclic(8), 12);
  EXPECT_EQ(r_cyclic(1), 1);
  EXPECT_EQ(r_cyclic(30), 72);
}

TEST(Corollary, Examples) {
  EXPECT_EQ(corollary_constant(8), Rational(1));
  EXPECT_EQ(corollary_constant(7), make_rational(2, 3));
  EXPECT_EQ(corollary_constant(5), Rational(0));
  EXPECT_FALSE(corollary_constant(6));
}

TEST(Corollary, MatchesSumUpTo2000) {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto c = corollary_constant(n);
    if (!c) continue;
    EXPECT_EQ(*c, Rational(qc_sum(n)) - Rational(r_cyclic(n), Integer(6))) << n;
  }
}

TEST(PrimePower, Branches) {
  EXPECT_EQ(qc_prime_power(2, 3), Rational(3));
  EXPECT_EQ(qc_prime_power(3, 2), Rational(2));
  EXPECT_EQ(qc_prime_power(7, 1), Rational(2));
  EXPECT_EQ(qc_prime_power(5, 1), Rational(1));
  EXPECT_FALSE(qc_prime_power(2, 2));
  EXPECT_FALSE(qc_prime_power(3, 1));
}

TEST(PrimePower, MatchesSumUpTo2000) {
  int checked = 0;
  for (u64 p = 2; p <= 2000; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (unsigned a = 1; q <= 2000; ++a, q *= p) {
      if (const auto v = qc_prime_power(p, a)) {
        EXPECT_EQ(*v, Rational(qc_sum(q))) << p << "^" << a;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(ClosedFormCase, Classification) {
  EXPECT_EQ(classify_closed_form(10), ClosedFormCase::EvenTwoOnce);
  EXPECT_EQ(classify_closed_form(12), ClosedFormCase::EvenTwoSquared);
  EXPECT_EQ(classify_closed_form(40), ClosedFormCase::EvenTwoCubedOrMore);
  EXPECT_EQ(classify_closed_form(91), ClosedFormCase::OddAllOneModSix);
  EXPECT_EQ(classify_closed_form(21), ClosedFormCase::OddThreeOnce);
  EXPECT_EQ(classify_closed_form(63), ClosedFormCase::OddThreeSquaredOrMore);
  EXPECT_EQ(classify_closed_form(45), ClosedFormCase::OddSomeFiveModSix);
  EXPECT_FALSE(classify_closed_form(3));
}
