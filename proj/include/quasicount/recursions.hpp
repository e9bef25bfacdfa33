#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "quasicount/numtheory.hpp"
#include "quasicount/rational.hpp"

namespace quasicount {

/// The recursive identities relating QC of an extended modulus to QC of a
/// smaller one. `r` below is always the number of distinct primes of the
/// base modulus.
enum class Identity {
  /// n = 2 * odd, q odd prime not dividing n:
  /// QC(n q^b) = (QC(n) + 1 - 2^(r-2)) q^(b-1)(q+1) - 1 + 2^(r-1)
  EvenAppendPrime,
  /// QC(2 p^a q^b) = QC(2 p^a) q^(b-1)(q+1) + 1
  EvenTwoPrimeBase,
  /// 4 | n: QC(n) = 2 QC(n/2) + 1, minus 2^r once 16 | n
  DoubleTwoPower,
  /// all primes of n and q == 1 mod 6:
  /// QC(n q^b) = (QC(n) + 1 - (5/3) 2^(r-1)) q^(b-1)(q+1) - 1 + (5/3) 2^r
  OneModSixAppendPrime,
  /// all primes of n == 1 mod 6: QC(3n) = 4 QC(n) + 3 - 2^(r+1)
  TimesThree,
  /// all primes of n == 1 mod 6, a >= 2:
  /// QC(3^a n) = 4*3^(a-1) QC(n) + 4*3^(a-1) - 1 + (1 - 10*3^(a-2)) 2^r
  TimesThreePower,
  /// p == 5 mod 6: QC(p1^a1 p^a) = QC(p^a) p1^(a1-1)(p1+1) + 1
  FiveModSixSecondPrime,
  /// odd n with >= 2 primes, one == 5 mod 6, q odd prime not dividing n:
  /// QC(n q^b) = (QC(n) + 1 - 2^(r-1)) q^(b-1)(q+1) - 1 + 2^r
  FiveModSixAppendPrime,
};

inline constexpr std::array<Identity, 8> kAllIdentities = {
    Identity::EvenAppendPrime,      Identity::EvenTwoPrimeBase, Identity::DoubleTwoPower,
    Identity::OneModSixAppendPrime, Identity::TimesThree,       Identity::TimesThreePower,
    Identity::FiveModSixSecondPrime, Identity::FiveModSixAppendPrime,
};

std::string_view to_string(Identity id);

struct IdentityCheck {
  Identity identity;
  u64 base;      // modulus on the right-hand side
  u64 extended;  // modulus on the left-hand side
  Integer lhs;
  Rational rhs;
  bool passed;
};

struct IdentitySummary {
  Identity identity;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Instances whose arithmetic hypotheses hold but where a QC argument
  /// falls outside the closed-form domain (bases 2, 4 and 6).
  std::size_t skipped = 0;
};

struct RecursionReport {
  u64 n_max = 0;
  std::vector<IdentityCheck> checks;
  std::vector<IdentitySummary> summaries;

  std::size_t failures() const;
};

/// Instantiates every identity with all moduli <= n_max and evaluates both
/// sides with qc_sum. Requires n_max >= 10 (DomainError otherwise).
RecursionReport verify_recursions(u64 n_max);

}  // namespace quasicount
