#include "quasicount/signatures.hpp"

#include <algorithm>
#include <numeric>

#include "quasicount/errors.hpp"
#include "quasicount/rational.hpp"

namespace quasicount {

Signature::Signature(u64 a, u64 b, u64 c) : periods_{a, b, c} {
  if (a == 0 || b == 0 || c == 0) throw DomainError("signature periods must be positive");
  std::sort(periods_.begin(), periods_.end());
}

int Signature::distinct_count() const {
  const auto& p = periods_;
  if (p[0] == p[2]) return 1;
  if (p[0] == p[1] || p[1] == p[2]) return 2;
  return 3;
}

std::string Signature::to_string() const {
  return "(" + std::to_string(periods_[0]) + "," + std::to_string(periods_[1]) + "," +
         std::to_string(periods_[2]) + ")";
}

bool satisfies_harvey(u64 n, const Signature& sig) {
  if (n < 2) return false;
  const auto& p = sig.periods();
  if (p[0] < 2) return false;
  for (u64 x : p) {
    if (n % x != 0) return false;
  }
  // With three periods and quotient genus 0, "lcm without n_i equals the
  // full lcm" and "lcm equals n" collapse to every pair having lcm n.
  if (std::lcm(p[0], p[1]) != n || std::lcm(p[0], p[2]) != n || std::lcm(p[1], p[2]) != n) {
    return false;
  }
  if (n % 2 == 0) {
    const u64 two_part = u64{1} << valuation(2, n);
    const auto hits = std::count_if(p.begin(), p.end(), [&](u64 x) { return x % two_part == 0; });
    if (hits % 2 != 0) return false;
  }
  return true;
}

namespace {

// 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc
bool is_hyperbolic(const Signature& sig) {
  const Integer a = sig[0], b = sig[1], c = sig[2];
  return b * c + a * c + a * b < a * b * c;
}

}  // namespace

bool is_admissible(u64 n, const Signature& sig) {
  return satisfies_harvey(n, sig) && is_hyperbolic(sig);
}

std::vector<Signature> enumerate_signatures(u64 n) {
  std::vector<Signature> out;
  if (n < 2) return out;
  const std::vector<u64> divs = divisors(n);
  const std::size_t d = divs.size();
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      if (std::lcm(divs[i], divs[j]) != n) continue;
      for (std::size_t k = j; k < d; ++k) {
        Signature sig(divs[i], divs[j], divs[k]);
        if (is_admissible(n, sig)) out.push_back(sig);
      }
    }
  }
  // Loop order already yields ascending (i, j, k).
  return out;
}

u64 genus(u64 n, const Signature& sig) {
  if (!is_admissible(n, sig)) {
    throw DomainError("genus: signature " + sig.to_string() + " is not admissible for n = " +
                      std::to_string(n));
  }
  Rational deficit = 1;
  for (u64 x : sig.periods()) deficit -= Rational(Integer(1), Integer(x));
  const Rational g = 1 + Rational(Integer(n), Integer(2)) * deficit;
  const Integer value = to_integer(g, "genus of " + sig.to_string() + " for n = " + std::to_string(n));
  if (value < 2) {
    throw ConsistencyError("genus " + to_string(value) + " below 2 for " + sig.to_string());
  }
  return to_u64(value);
}

}  // namespace quasicount
