#include "quasicount/actions.hpp"

#include <numeric>

#include "quasicount/errors.hpp"

namespace quasicount {

std::string_view to_string(SignatureCase c) {
  switch (c) {
    case SignatureCase::AllDistinct: return "AllDistinct";
    case SignatureCase::TwoEqual: return "TwoEqual";
    case SignatureCase::AllEqual: return "AllEqual";
  }
  return "?";
}

std::string_view to_string(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::EvenTwoOnce: return "even, 2 || n";
    case ClosedFormCase::EvenTwoSquared: return "even, 4 || n";
    case ClosedFormCase::EvenTwoCubedOrMore: return "even, 8 | n";
    case ClosedFormCase::OddAllOneModSix: return "odd, all p = 1 mod 6";
    case ClosedFormCase::OddThreeOnce: return "odd, 3 || n, rest = 1 mod 6";
    case ClosedFormCase::OddThreeSquaredOrMore: return "odd, 9 | n, rest = 1 mod 6";
    case ClosedFormCase::OddSomeFiveModSix: return "odd, some p = 5 mod 6";
  }
  return "?";
}

TValueBreakdown t_value(u64 n, const Signature& sig) {
  if (!is_admissible(n, sig)) {
    throw DomainError("t_value: signature " + sig.to_string() + " is not admissible for n = " +
                      std::to_string(n));
  }
  const Factorization fn = factorize(n);
  const auto& p = sig.periods();
  const u64 g = std::gcd(std::gcd(p[0], p[1]), p[2]);

  TValueBreakdown out{sig, SignatureCase::AllDistinct, std::nullopt, std::nullopt, 0, {}, Rational(1), 0};
  for (const auto& [prime, e] : fn.parts()) {
    if (g % ipow(prime, e) == 0) {
      out.w_primes.push_back(prime);
      out.product_term *= Rational(Integer(prime - 2), Integer(prime - 1));
    }
  }

  Rational t;
  switch (sig.distinct_count()) {
    case 3:
      out.case_tag = SignatureCase::AllDistinct;
      out.phi_term = euler_phi(g);
      t = out.phi_term * out.product_term;
      break;
    case 2: {
      out.case_tag = SignatureCase::TwoEqual;
      // Pairwise lcm = n forces the repeated period to be n itself.
      if (p[1] != n || p[2] != n) {
        throw ConsistencyError("t_value: repeated period of " + sig.to_string() + " is not n = " +
                               std::to_string(n));
      }
      const u64 odd_one = p[0];
      out.tau1_term = tau1_closed(n, odd_one);
      out.phi_term = euler_phi(odd_one);
      t = Rational(Integer(1), Integer(2)) * (*out.tau1_term + out.phi_term * out.product_term);
      break;
    }
    default:
      out.case_tag = SignatureCase::AllEqual;
      // (n,n,n) fails the parity condition for even n, so n is odd here.
      out.tau2_term = tau2_closed(n);
      out.phi_term = euler_phi(fn);
      t = Rational(Integer(1), Integer(6)) * (3 + 2 * *out.tau2_term + out.phi_term * out.product_term);
      break;
  }
  out.value = to_integer(t, "T-value of " + sig.to_string() + " for n = " + std::to_string(n));
  if (out.value < 0) throw ConsistencyError("negative T-value for " + sig.to_string());
  return out;
}

Integer qc_sum(u64 n) {
  Integer total = 0;
  for (const auto& sig : enumerate_signatures(n)) total += t_value(n, sig).value;
  return total;
}

std::optional<ClosedFormCase> classify_closed_form(u64 n) {
  if (n == 0) throw DomainError("classify_closed_form: n must be positive");
  const Factorization f = factorize(n);
  if (n % 2 == 0) {
    if (n < 8) return std::nullopt;
    switch (f.exponent_of(2)) {
      case 1: return ClosedFormCase::EvenTwoOnce;
      case 2: return ClosedFormCase::EvenTwoSquared;
      default: return ClosedFormCase::EvenTwoCubedOrMore;
    }
  }
  if (n < 5) return std::nullopt;
  bool five_mod_six = false;
  for (const auto& [p, e] : f.parts()) five_mod_six = five_mod_six || p % 6 == 5;
  if (five_mod_six) return ClosedFormCase::OddSomeFiveModSix;
  switch (f.exponent_of(3)) {
    case 0: return ClosedFormCase::OddAllOneModSix;
    case 1: return ClosedFormCase::OddThreeOnce;
    default: return ClosedFormCase::OddThreeSquaredOrMore;
  }
}

namespace {

// prod over p | n, p != skip of p^(a-1)(p+1)
Integer odd_part_product(const Factorization& f, u64 skip) {
  Integer prod = 1;
  for (const auto& [p, e] : f.parts()) {
    if (p == skip) continue;
    prod *= Integer(ipow(p, e - 1)) * (p + 1);
  }
  return prod;
}

// The {2^(r-2), 2^(r-1), 2^r} / {1, 4/3, 5/3} * 2^(r-1) correction term.
Rational correction(ClosedFormCase c, int r) {
  switch (c) {
    case ClosedFormCase::EvenTwoOnce: return pow2(r - 2);
    case ClosedFormCase::EvenTwoSquared: return pow2(r - 1);
    case ClosedFormCase::EvenTwoCubedOrMore: return pow2(r);
    case ClosedFormCase::OddSomeFiveModSix:
    case ClosedFormCase::OddThreeSquaredOrMore: return pow2(r - 1);
    case ClosedFormCase::OddThreeOnce: return Rational(4, 3) * pow2(r - 1);
    case ClosedFormCase::OddAllOneModSix: return Rational(5, 3) * pow2(r - 1);
  }
  return 0;
}

Rational unified_constant(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::EvenTwoOnce: return Rational(1, 4);
    case ClosedFormCase::EvenTwoSquared: return Rational(1, 2);
    case ClosedFormCase::EvenTwoCubedOrMore: return Rational(1);
    case ClosedFormCase::OddAllOneModSix: return Rational(5, 6);
    case ClosedFormCase::OddThreeOnce: return Rational(2, 3);
    case ClosedFormCase::OddThreeSquaredOrMore:
    case ClosedFormCase::OddSomeFiveModSix: return Rational(1, 2);
  }
  return 0;
}

}  // namespace

std::optional<Integer> qc_closed(u64 n) {
  const auto c = classify_closed_form(n);
  if (!c) return std::nullopt;
  const Factorization f = factorize(n);
  const int r = static_cast<int>(f.num_primes());
  Rational main;
  if (n % 2 == 0) {
    main = pow2(static_cast<int>(f.exponent_of(2)) - 2) * odd_part_product(f, 2);
  } else {
    main = Rational(odd_part_product(f, 0), Integer(6));
  }
  return to_integer(main - 1 + correction(*c, r), "closed form for n = " + std::to_string(n));
}

Integer r_cyclic(u64 n) {
  if (n == 0) throw DomainError("r_cyclic: n must be positive");
  return odd_part_product(factorize(n), 0);
}

std::optional<UnifiedForm> qc_unified(u64 n) {
  const auto c = classify_closed_form(n);
  if (!c) return std::nullopt;
  const int r = static_cast<int>(factorize(n).num_primes());
  const Rational a = unified_constant(*c);
  const Rational value = Rational(r_cyclic(n), Integer(6)) - 1 + a * pow2(r);
  return UnifiedForm{a, to_integer(value, "unified form for n = " + std::to_string(n))};
}

std::optional<Rational> corollary_constant(u64 n) {
  const auto c = classify_closed_form(n);
  if (!c) return std::nullopt;
  return -1 + correction(*c, static_cast<int>(factorize(n).num_primes()));
}

std::optional<Rational> qc_prime_power(u64 p, unsigned a) {
  if (!is_prime(p)) throw DomainError("qc_prime_power: " + std::to_string(p) + " is not prime");
  if (a == 0) throw DomainError("qc_prime_power: exponent must be positive");
  if (p == 2) {
    if (a < 3) return std::nullopt;
    return pow2(static_cast<int>(a) - 2) + 1;
  }
  if (p == 3) {
    if (a < 2) return std::nullopt;
    return Rational(2 * Integer(ipow(3, a - 2)));
  }
  const Rational base = Rational(Integer(ipow(p, a - 1)) * (p + 1), Integer(6));
  return p % 6 == 5 ? base : base + Rational(2, 3);
}

}  // namespace quasicount
