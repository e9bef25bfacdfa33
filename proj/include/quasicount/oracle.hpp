#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "quasicount/numtheory.hpp"
#include "quasicount/signatures.hpp"

// Brute-force ground truth. Nothing in here calls the closed forms or the
// T-value formulas; it only enumerates generating vectors of Z/nZ and
// counts orbits.

namespace quasicount::oracle {

inline constexpr u64 kDefaultBound = 2000;

/// (e1, e2, e3) in Z/nZ with e1 + e2 + e3 == 0.
struct GeneratingTriple {
  std::array<u64, 3> entries;
  u64 modulus;

  std::string to_string() const;
  friend auto operator<=>(const GeneratingTriple&, const GeneratingTriple&) = default;
};

struct OrbitClass {
  GeneratingTriple canonical;  // lexicographically least member
  u64 size;
};

/// Additive order of x in Z/nZ.
u64 element_order(u64 x, u64 n);

/// Zero sum, orders a permutation of sig's periods, lcm of orders == n.
bool is_generating_triple(const GeneratingTriple& t, const Signature& sig);

/// Every generating triple for `sig`, ascending. Throws OracleBoundError
/// for n > bound and DomainError for an inadmissible signature.
std::vector<GeneratingTriple> enumerate_triples(u64 n, const Signature& sig, u64 bound = kDefaultBound);

/// Orbits under (Z/nZ)^* x S_3 acting by unit scaling and position
/// permutation, ordered by canonical member.
std::vector<OrbitClass> orbit_classes(u64 n, const Signature& sig, u64 bound = kDefaultBound);

u64 count_classes(u64 n, const Signature& sig, u64 bound = kDefaultBound);

/// The same orbit count through Burnside's lemma: average number of fixed
/// triples over the acting group. Costs |group| * |triples|; meant for
/// small n.
u64 count_classes_burnside(u64 n, const Signature& sig, u64 bound = kDefaultBound);

/// Orbit count over every generating triple of Z/nZ whose order multiset
/// is hyperbolic. Equals the sum of count_classes over all admissible
/// signatures, but never consults the admissibility rules.
u64 qc_oracle(u64 n, u64 bound = kDefaultBound);

/// Sorted order multisets realized by some generating triple of Z/nZ,
/// optionally restricted to hyperbolic ones. Ascending.
std::vector<Signature> realized_signatures(u64 n, bool hyperbolic_only = true, u64 bound = kDefaultBound);

/// Orbits of pairs (s0, s1) in (Z/nZ)^2 with gcd(s0, s1, n) == 1 under
/// simultaneous unit scaling.
u64 dessin_pairs_oracle(u64 n, u64 bound = kDefaultBound);

/// Units of Z/nZ, ascending. {0} for n == 1.
std::vector<u64> units(u64 n);

}  // namespace quasicount::oracle
