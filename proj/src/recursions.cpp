#include "quasicount/recursions.hpp"

#include <algorithm>
#include <functional>

#include "quasicount/actions.hpp"
#include "quasicount/errors.hpp"

namespace quasicount {

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::EvenAppendPrime: return "even-append-prime";
    case Identity::EvenTwoPrimeBase: return "even-two-prime-base";
    case Identity::DoubleTwoPower: return "double-two-power";
    case Identity::OneModSixAppendPrime: return "one-mod-six-append-prime";
    case Identity::TimesThree: return "times-three";
    case Identity::TimesThreePower: return "times-three-power";
    case Identity::FiveModSixSecondPrime: return "five-mod-six-second-prime";
    case Identity::FiveModSixAppendPrime: return "five-mod-six-append-prime";
  }
  return "?";
}

std::size_t RecursionReport::failures() const {
  std::size_t total = 0;
  for (const auto& s : summaries) total += s.failed;
  return total;
}

namespace {

bool in_closed_domain(u64 m) { return m == 1 || classify_closed_form(m).has_value(); }

bool all_one_mod_six(const Factorization& f) {
  return std::all_of(f.parts().begin(), f.parts().end(), [](const PrimePower& pp) { return pp.prime % 6 == 1; });
}

bool has_five_mod_six(const Factorization& f) {
  return std::any_of(f.parts().begin(), f.parts().end(), [](const PrimePower& pp) { return pp.prime % 6 == 5; });
}

// q^(b-1)(q+1)
Integer prime_power_weight(u64 q, unsigned b) { return Integer(ipow(q, b - 1)) * (q + 1); }

class Checker {
 public:
  explicit Checker(u64 n_max) : n_max_(n_max), qc_(n_max + 1) {
    for (u64 m = 1; m <= n_max; ++m) qc_[m] = qc_sum(m);
    for (u64 p = 3; p <= n_max; p += 2) {
      if (is_prime(p)) odd_primes_.push_back(p);
    }
    report_.n_max = n_max;
    for (Identity id : kAllIdentities) report_.summaries.push_back({id});
  }

  const Integer& qc(u64 m) const { return qc_[m]; }
  u64 n_max() const { return n_max_; }
  const std::vector<u64>& odd_primes() const { return odd_primes_; }

  void record(Identity id, u64 base, u64 extended, const Rational& rhs) {
    auto& s = report_.summaries[static_cast<std::size_t>(id)];
    if (!in_closed_domain(base) || !in_closed_domain(extended)) {
      ++s.skipped;
      return;
    }
    const bool ok = Rational(qc_[extended]) == rhs;
    ++s.checked;
    if (!ok) ++s.failed;
    report_.checks.push_back({id, base, extended, qc_[extended], rhs, ok});
  }

  // Calls fn(q, b, n * q^b) for every odd prime q not dividing n and b >= 1
  // with n * q^b <= n_max.
  void for_each_extension(u64 n, const std::function<bool(u64)>& admit_prime,
                          const std::function<void(u64, unsigned, u64)>& fn) const {
    for (u64 q : odd_primes_) {
      if (n * q > n_max_) break;
      if (n % q == 0 || !admit_prime(q)) continue;
      u64 m = n * q;
      for (unsigned b = 1; m <= n_max_; ++b, m *= q) fn(q, b, m);
    }
  }

  RecursionReport take() { return std::move(report_); }

 private:
  u64 n_max_;
  std::vector<Integer> qc_;
  std::vector<u64> odd_primes_;
  RecursionReport report_;
};

}  // namespace

RecursionReport verify_recursions(u64 n_max) {
  if (n_max < 10) throw DomainError("verify_recursions: n_max must be at least 10");
  Checker c(n_max);
  const auto any_prime = [](u64) { return true; };
  const auto one_mod_six = [](u64 q) { return q % 6 == 1; };

  for (u64 n = 1; n <= n_max; ++n) {
    const Factorization f = factorize(n);
    const int r = static_cast<int>(f.num_primes());

    if (f.exponent_of(2) == 1) {
      c.for_each_extension(n, any_prime, [&](u64 q, unsigned b, u64 m) {
        const Rational rhs = (c.qc(n) + 1 - pow2(r - 2)) * prime_power_weight(q, b) - 1 + pow2(r - 1);
        c.record(Identity::EvenAppendPrime, n, m, rhs);
      });
      if (r == 2) {
        c.for_each_extension(n, any_prime, [&](u64 q, unsigned b, u64 m) {
          c.record(Identity::EvenTwoPrimeBase, n, m, Rational(c.qc(n) * prime_power_weight(q, b) + 1));
        });
      }
    }

    if (f.exponent_of(2) >= 2) {
      const Rational rhs = 2 * c.qc(n / 2) + 1 - (f.exponent_of(2) >= 4 ? pow2(r) : Rational(0));
      c.record(Identity::DoubleTwoPower, n / 2, n, rhs);
    }

    if (n % 2 == 1 && all_one_mod_six(f)) {
      if (n > 1) {
        c.for_each_extension(n, one_mod_six, [&](u64 q, unsigned b, u64 m) {
          const Rational rhs = (c.qc(n) + 1 - Rational(5, 3) * pow2(r - 1)) * prime_power_weight(q, b) - 1 +
                               Rational(5, 3) * pow2(r);
          c.record(Identity::OneModSixAppendPrime, n, m, rhs);
        });
        if (3 * n <= n_max) {
          c.record(Identity::TimesThree, n, 3 * n, 4 * c.qc(n) + 3 - pow2(r + 1));
        }
      }
      u64 m = 9 * n;
      for (unsigned a = 2; m <= n_max; ++a, m *= 3) {
        const Integer three_a1 = ipow(3, a - 1);
        const Rational rhs = 4 * three_a1 * c.qc(n) + 4 * three_a1 - 1 +
                             (1 - 10 * Rational(Integer(ipow(3, a - 2)))) * pow2(r);
        c.record(Identity::TimesThreePower, n, m, rhs);
      }
    }

    if (n % 2 == 1 && has_five_mod_six(f)) {
      if (r == 1) {
        c.for_each_extension(n, any_prime, [&](u64 q, unsigned b, u64 m) {
          c.record(Identity::FiveModSixSecondPrime, n, m, Rational(c.qc(n) * prime_power_weight(q, b) + 1));
        });
      } else {
        c.for_each_extension(n, any_prime, [&](u64 q, unsigned b, u64 m) {
          const Rational rhs = (c.qc(n) + 1 - pow2(r - 1)) * prime_power_weight(q, b) - 1 + pow2(r);
          c.record(Identity::FiveModSixAppendPrime, n, m, rhs);
        });
      }
    }
  }
  return c.take();
}

}  // namespace quasicount
