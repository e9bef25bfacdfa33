#include "quasicount/verify.hpp"

#include "quasicount/actions.hpp"
#include "quasicount/errors.hpp"
#include "quasicount/lloyd.hpp"
#include "quasicount/recursions.hpp"

namespace quasicount {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Recursions: return "recursions";
    case Suite::Oracle: return "oracle";
    case Suite::Corollary: return "corollary";
    case Suite::Lloyd: return "lloyd";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Recursions, Suite::Oracle, Suite::Corollary, Suite::Lloyd}) {
    if (name == to_string(s)) return s;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

u64 suite_n_max_limit(Suite s, u64 oracle_bound) {
  switch (s) {
    case Suite::Recursions: return 20000;
    case Suite::Oracle: return oracle_bound;
    case Suite::Corollary: return 100000;
    case Suite::Lloyd: return 400;
  }
  return 0;
}

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checked;
    if (!ok) {
      ++r_.failed;
      r_.failures.push_back(what);
    }
  }

 private:
  SuiteResult& r_;
};

void run_recursions(SuiteResult& out) {
  const RecursionReport report = verify_recursions(out.n_max);
  for (const auto& s : report.summaries) {
    out.checked += s.checked;
    out.failed += s.failed;
    out.skipped += s.skipped;
  }
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    out.failures.push_back(std::string(to_string(c.identity)) + ": QC(" + std::to_string(c.extended) +
                           ") = " + to_string(c.lhs) + " but recursion from " + std::to_string(c.base) +
                           " gives " + to_string(c.rhs));
  }
}

void run_oracle(SuiteResult& out, u64 bound) {
  Tally t(out);
  for (u64 n = 2; n <= out.n_max; ++n) {
    const Integer sum = qc_sum(n);
    const u64 orbits = oracle::qc_oracle(n, bound);
    t.expect(sum == orbits, "QC(" + std::to_string(n) + "): sum " + to_string(sum) + " vs oracle " +
                                std::to_string(orbits));
    const Integer dessins = r_cyclic(n);
    const u64 pairs = oracle::dessin_pairs_oracle(n, bound);
    t.expect(dessins == pairs, "r(C_" + std::to_string(n) + "): formula " + to_string(dessins) +
                                   " vs oracle " + std::to_string(pairs));
  }
}

void run_corollary(SuiteResult& out) {
  Tally t(out);
  for (u64 n = 1; n <= out.n_max; ++n) {
    const auto closed = qc_closed(n);
    if (!closed) {
      ++out.skipped;
      continue;
    }
    const Integer sum = qc_sum(n);
    const std::string tag = "n = " + std::to_string(n) + ": ";
    t.expect(*closed == sum, tag + "closed " + to_string(*closed) + " vs sum " + to_string(sum));
    const auto unified = qc_unified(n);
    t.expect(unified && unified->value == sum, tag + "unified form disagrees with sum " + to_string(sum));
    const Rational observed = Rational(sum) - Rational(r_cyclic(n), Integer(6));
    const auto predicted = corollary_constant(n);
    t.expect(predicted && *predicted == observed,
             tag + "QC - r/6 = " + to_string(observed) + ", table predicts " +
                 (predicted ? to_string(*predicted) : std::string("nothing")));
    const Factorization f = factorize(n);
    if (f.num_primes() == 1) {
      const auto [p, a] = f.parts()[0];
      if (const auto pp = qc_prime_power(p, a)) {
        t.expect(*pp == Rational(sum), tag + "prime-power formula gives " + to_string(*pp));
      }
    }
  }
}

void run_lloyd(SuiteResult& out) {
  Tally t(out);
  for (u64 p = 5; p <= out.n_max; p += 2) {
    if (!is_prime(p)) continue;
    const Rational coefficient = lloyd_coefficient(p, 3);
    const Integer sum = qc_sum(p);
    t.expect(coefficient == Rational(sum), "p = " + std::to_string(p) + ": x^3 coefficient " +
                                               to_string(coefficient) + " vs QC " + to_string(sum));
  }
}

}  // namespace

SuiteResult run_suite(Suite s, u64 n_max, u64 oracle_bound) {
  const u64 limit = suite_n_max_limit(s, oracle_bound);
  const u64 floor = s == Suite::Recursions ? 10 : 2;
  if (n_max < floor || n_max > limit) {
    throw DomainError("--n-max for suite '" + std::string(to_string(s)) + "' must lie in [" +
                      std::to_string(floor) + ", " + std::to_string(limit) + "]");
  }
  SuiteResult out{s, n_max, 0, 0, 0, {}};
  switch (s) {
    case Suite::Recursions: run_recursions(out); break;
    case Suite::Oracle: run_oracle(out, oracle_bound); break;
    case Suite::Corollary: run_corollary(out); break;
    case Suite::Lloyd: run_lloyd(out); break;
  }
  return out;
}

}  // namespace quasicount
