#include "quasicount/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "quasicount/errors.hpp"

namespace quasicount {

namespace {

__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness set that is exact for every n < 3.3 * 10^24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

void require_positive(u64 n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": n must be positive");
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned valuation(u64 p, u64 n) {
  if (p < 2 || n == 0) throw DomainError("valuation: need p >= 2 and n > 0");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

u64 ipow(u64 base, unsigned exponent) {
  u64 result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base) {
      throw DomainError("ipow: overflow");
    }
    result *= base;
  }
  return result;
}

unsigned Factorization::exponent_of(u64 prime) const {
  for (const auto& pp : parts_) {
    if (pp.prime == prime) return pp.exponent;
  }
  return 0;
}

u64 Factorization::prime_power_part(u64 prime) const { return ipow(prime, exponent_of(prime)); }

std::string Factorization::to_string() const {
  if (parts_.empty()) return "1";
  std::string out;
  for (const auto& pp : parts_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

Factorization factorize(u64 n) {
  require_positive(n, "factorize");
  Factorization f;
  f.value_ = n;
  u64 rest = n;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.parts_.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= rest / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) {
    if (!is_prime(rest)) throw ConsistencyError("factorize: cofactor " + std::to_string(rest) + " is not prime");
    f.parts_.push_back({rest, 1});
  }
  return f;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.parts()) phi *= ipow(p, e - 1) * (p - 1);
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.parts()) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

int legendre_minus_three(u64 p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("legendre_minus_three: " + std::to_string(p) + " is not an odd prime");
  }
  if (p == 3) return 0;
  return p % 6 == 1 ? 1 : -1;
}

u64 tau2_closed(u64 n) {
  require_positive(n, "tau2_closed");
  if (n % 2 == 0) throw DomainError("tau2_closed: n must be odd");
  if (n == 1) return 0;
  const Factorization f = factorize(n);
  u64 count = 1;
  for (const auto& [p, a] : f.parts()) {
    if (p == 3) {
      count *= a == 1 ? 1 : 0;
    } else {
      // 1 + (-3|p) roots mod p, each lifting uniquely to p^a.
      count *= static_cast<u64>(1 + legendre_minus_three(p));
    }
  }
  return count;
}

u64 tau2_oracle(u64 n) {
  require_positive(n, "tau2_oracle");
  u64 count = 0;
  for (u64 x = 1; x < n; ++x) {
    const u128 v = static_cast<u128>(x) * x + x + 1;
    if (v % n == 0) ++count;
  }
  return count;
}

u64 tau1_closed(u64 m, u64 d) {
  require_positive(m, "tau1_closed");
  if (d == 0 || m % d != 0) {
    throw DomainError("tau1_closed: " + std::to_string(d) + " does not divide " + std::to_string(m));
  }
  // x == 0 is the only root with gcd(x, m) == m, and it is excluded.
  if (d == 1) return 0;
  const Factorization fm = factorize(m);
  for (const auto& [p, k] : fm.parts()) {
    if (p == 2) continue;
    const unsigned h = valuation(p, d);
    if (h != 0 && h != k) return 0;
  }
  const unsigned k0 = fm.exponent_of(2);
  const unsigned h0 = d % 2 == 0 ? valuation(2, d) : 0;
  // 2 || m and 2 | d force x odd, so x(x + 2) is odd.
  if (k0 == 1 && h0 == 1) return 0;
  if (h0 == 0 || h0 == 1) return 1;
  if (k0 >= 1 && h0 == k0 - 1) return 2;
  return 0;
}

u64 tau1_oracle(u64 m, u64 d) {
  require_positive(m, "tau1_oracle");
  if (d == 0 || m % d != 0) {
    throw DomainError("tau1_oracle: " + std::to_string(d) + " does not divide " + std::to_string(m));
  }
  const u64 target_gcd = m / d;
  u64 count = 0;
  for (u64 x = 1; x < m; ++x) {
    const u128 v = static_cast<u128>(x) * x + 2 * static_cast<u128>(x);
    if (v % m == 0 && std::gcd(x, m) == target_gcd) ++count;
  }
  return count;
}

u64 f_value(u64 p, unsigned k, unsigned a) {
  if (!is_prime(p)) throw DomainError("f_value: " + std::to_string(p) + " is not prime");
  if (a == 0) throw DomainError("f_value: exponent a must be positive");
  if (k > a) throw DomainError("f_value: k exceeds a");
  if (k == 0) return 1;
  if (k < a) return ipow(p, k - 1) * (p - 1);
  return ipow(p, a - 1) * (p - 2);
}

}  // namespace quasicount
