#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "quasicount/numtheory.hpp"

namespace quasicount {

/// Unordered triple of branching periods, stored ascending.
class Signature {
 public:
  /// Periods may be given in any order; zero is rejected with DomainError.
  Signature(u64 a, u64 b, u64 c);

  const std::array<u64, 3>& periods() const { return periods_; }
  u64 operator[](std::size_t i) const { return periods_[i]; }

  /// Number of distinct periods (1, 2 or 3).
  int distinct_count() const;

  std::string to_string() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::array<u64, 3> periods_;
};

/// Harvey's conditions for a (0; n1, n2, n3) surface-kernel epimorphism onto
/// C_n, plus 1/n1 + 1/n2 + 1/n3 < 1 so that the surface has genus >= 2.
/// Degenerate triples (a period below 2) and n < 2 give false.
bool is_admissible(u64 n, const Signature& sig);

/// Same, without the hyperbolicity filter. Exposed so the Euclidean
/// exceptions ((3,3,3), (2,4,4), (2,3,6)) can be inspected.
bool satisfies_harvey(u64 n, const Signature& sig);

/// All admissible signatures for C_n, lexicographically sorted.
/// Walks unordered divisor triples: O(d(n)^2) pairs, inner loop only for
/// pairs whose lcm is already n.
std::vector<Signature> enumerate_signatures(u64 n);

/// Riemann-Hurwitz: 1 + (n/2)(1 - 1/n1 - 1/n2 - 1/n3), evaluated exactly.
/// Throws DomainError for inadmissible input and ConsistencyError if the
/// result is not an integer >= 2.
u64 genus(u64 n, const Signature& sig);

}  // namespace quasicount
