#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quasicount/numtheory.hpp"
#include "quasicount/rational.hpp"
#include "quasicount/signatures.hpp"

namespace quasicount {

enum class SignatureCase { AllDistinct, TwoEqual, AllEqual };

std::string_view to_string(SignatureCase c);

/// Every ingredient of the Benim-Wootton count for one signature.
struct TValueBreakdown {
  Signature signature;
  SignatureCase case_tag;
  std::optional<u64> tau1_term;  // TwoEqual only
  std::optional<u64> tau2_term;  // AllEqual only
  u64 phi_term;
  /// Primes p | n whose full power p^v_p(n) divides all three periods.
  std::vector<u64> w_primes;
  /// prod over w_primes of (p - 2)/(p - 1).
  Rational product_term;
  Integer value;

  friend bool operator==(const TValueBreakdown&, const TValueBreakdown&) = default;
};

/// Number of topologically distinct C_n actions with signature `sig`.
/// Throws DomainError when `sig` is not admissible and ConsistencyError
/// when the assembled formula is not a nonnegative integer.
TValueBreakdown t_value(u64 n, const Signature& sig);

/// QC(n) as the sum of T-values over all admissible signatures.
Integer qc_sum(u64 n);

/// Which row of the closed-form tables applies to n. Shared by the closed
/// form, the unified a * 2^r form and the QC - r/6 corollary.
enum class ClosedFormCase {
  EvenTwoOnce,           // v2(n) = 1
  EvenTwoSquared,        // v2(n) = 2
  EvenTwoCubedOrMore,    // v2(n) >= 3
  OddAllOneModSix,       // every prime == 1 mod 6
  OddThreeOnce,          // 3 || n, other primes == 1 mod 6
  OddThreeSquaredOrMore, // 9 | n, other primes == 1 mod 6
  OddSomeFiveModSix,     // some prime == 5 mod 6
};

std::string_view to_string(ClosedFormCase c);

/// nullopt outside the closed-form domain (even n < 8, odd n < 5).
std::optional<ClosedFormCase> classify_closed_form(u64 n);

/// Closed form for even n >= 8 and odd n >= 5; nullopt elsewhere.
std::optional<Integer> qc_closed(u64 n);

struct UnifiedForm {
  Rational constant;  // a in QC(n) = r(C_n)/6 - 1 + a * 2^r
  Integer value;
};

std::optional<UnifiedForm> qc_unified(u64 n);

/// Regular dessins with automorphism group C_n: n * prod_{p | n}(1 + 1/p).
Integer r_cyclic(u64 n);

/// Predicted QC(n) - r(C_n)/6 from the corollary table; nullopt outside the
/// closed-form domain.
std::optional<Rational> corollary_constant(u64 n);

/// Prime-power formula for QC(p^a). nullopt for the excluded cases
/// p = 2 with a < 3 and p = 3 with a = 1.
std::optional<Rational> qc_prime_power(u64 p, unsigned a);

}  // namespace quasicount
