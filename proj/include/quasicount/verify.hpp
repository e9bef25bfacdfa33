#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quasicount/numtheory.hpp"
#include "quasicount/oracle.hpp"

namespace quasicount {

enum class Suite { Recursions, Oracle, Corollary, Lloyd };

std::string_view to_string(Suite s);

/// Throws DomainError for an unknown name.
Suite parse_suite(std::string_view name);

struct SuiteResult {
  Suite suite;
  u64 n_max;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// One human-readable line per failed check.
  std::vector<std::string> failures;

  bool passed() const { return failed == 0; }
};

/// Per-suite limits on n_max; the oracle suite is additionally capped by
/// the oracle bound.
u64 suite_n_max_limit(Suite s, u64 oracle_bound);

/// Recursions: every recursive identity with both sides <= n_max.
/// Oracle: qc_oracle(n) == qc_sum(n) and dessin_pairs_oracle(n) == r_cyclic(n), 2 <= n <= n_max.
/// Corollary: closed form, unified form, QC - r/6 constants and the
///   prime-power formulas against qc_sum for every applicable n <= n_max.
/// Lloyd: x^3 coefficient against qc_sum for odd primes 5 <= p <= n_max.
/// Throws DomainError when n_max is out of range for the suite.
SuiteResult run_suite(Suite s, u64 n_max, u64 oracle_bound = oracle::kDefaultBound);

}  // namespace quasicount
