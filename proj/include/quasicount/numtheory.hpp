#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quasicount {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition. Primes are strictly increasing and
/// the product of the parts is value(); value() == 1 has no parts.
class Factorization {
 public:
  Factorization() = default;

  u64 value() const { return value_; }
  std::span<const PrimePower> parts() const { return parts_; }
  std::size_t num_primes() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// 0 when `prime` does not divide value().
  unsigned exponent_of(u64 prime) const;

  /// prime^exponent_of(prime).
  u64 prime_power_part(u64 prime) const;

  std::string to_string() const;

 private:
  friend Factorization factorize(u64 n);

  u64 value_ = 1;
  std::vector<PrimePower> parts_;
};

/// Trial division up to sqrt(n); a remaining cofactor is confirmed prime
/// with deterministic Miller-Rabin. Throws DomainError for n == 0.
Factorization factorize(u64 n);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// p-adic valuation of n (n > 0).
unsigned valuation(u64 p, u64 n);

/// Overflow-checked integer power.
u64 ipow(u64 base, unsigned exponent);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

/// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

/// (-3 | p) for an odd prime p.
int legendre_minus_three(u64 p);

// x^2 + x + 1 == 0 (mod n), counted over nonzero residues.
u64 tau2_closed(u64 n);
u64 tau2_oracle(u64 n);

// x^2 + 2x == 0 (mod m) with gcd(x, m) == m/d, counted over nonzero residues.
u64 tau1_closed(u64 m, u64 d);
u64 tau1_oracle(u64 m, u64 d);

/// Piecewise weight for the k-th layer of p^a:
/// 1 at k = 0, p^(k-1)(p-1) for 0 < k < a, p^(a-1)(p-2) at k = a.
u64 f_value(u64 p, unsigned k, unsigned a);

}  // namespace quasicount
