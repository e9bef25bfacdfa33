#include "quasicount/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include <CLI11.hpp>

#include "quasicount/errors.hpp"
#include "quasicount/report.hpp"

namespace quasicount::cli {

u64 oracle_bound_from_env() {
  const char* raw = std::getenv("QUASICOUNT_ORACLE_MAX");
  if (raw == nullptr || *raw == '\0') return oracle::kDefaultBound;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw DomainError("QUASICOUNT_ORACLE_MAX must be a positive integer, got '" + text + "'");
  }
  const u64 v = std::stoull(text);
  if (v == 0 || v > kMaxOracleBound) {
    throw DomainError("QUASICOUNT_ORACLE_MAX must lie in [1, " + std::to_string(kMaxOracleBound) + "]");
  }
  return v;
}

namespace {

void require_n(u64 n, const char* what = "n") {
  if (n < 1 || n > kMaxN) {
    throw DomainError(std::string(what) + " must lie in [1, " + std::to_string(kMaxN) + "], got " +
                      std::to_string(n));
  }
}

struct Options {
  std::string format = "table";
  bool quiet = false;

  u64 n = 0;
  std::string method = "sum";
  u64 range_a = 0;
  u64 range_b = 0;
  std::array<u64, 3> periods{};
  bool check = false;
  u64 p = 0;
  std::size_t order = 3;
  u64 n_max = 200;
  std::vector<std::string> suites{"all"};
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), format_(parse_format(o.format)) {}

  int qc() {
    require_n(o_.n);
    const QCReport r = build_report(o_.n, parse_method(o_.method), oracle_bound_from_env());
    emit(render_report(r, format_));
    return r.consistent ? kExitOk : kExitConsistency;
  }

  int range() {
    if (o_.range_a < 1 || o_.range_a > o_.range_b || o_.range_b > kMaxRange) {
      throw DomainError("range requires 1 <= a <= b <= " + std::to_string(kMaxRange));
    }
    emit(render_range(build_range(o_.range_a, o_.range_b), format_));
    return kExitOk;
  }

  int signatures() {
    require_n(o_.n);
    std::vector<SignatureRow> rows;
    for (const auto& sig : enumerate_signatures(o_.n)) rows.push_back({sig, genus(o_.n, sig)});
    emit(render_signatures(o_.n, rows, format_));
    return kExitOk;
  }

  int tvalue() {
    require_n(o_.n);
    for (u64 q : o_.periods) require_n(q, "period");
    const Signature sig(o_.periods[0], o_.periods[1], o_.periods[2]);
    if (!is_admissible(o_.n, sig)) {
      throw DomainError(sig.to_string() + " is not an admissible signature for C_" + std::to_string(o_.n));
    }
    emit(render_tvalue(o_.n, genus(o_.n, sig), t_value(o_.n, sig), format_));
    return kExitOk;
  }

  int dessins() {
    require_n(o_.n);
    const Integer r = r_cyclic(o_.n);
    std::optional<u64> orbits;
    if (o_.check) orbits = oracle::dessin_pairs_oracle(o_.n, oracle_bound_from_env());
    emit(render_dessins(o_.n, r, orbits, format_));
    return !orbits || Integer(*orbits) == r ? kExitOk : kExitConsistency;
  }

  int lloyd() {
    if (o_.p < 3 || o_.p > kMaxN || !is_prime(o_.p)) {
      throw DomainError("p must be an odd prime <= " + std::to_string(kMaxN));
    }
    if (o_.order < 3 || o_.order > 64) throw DomainError("--order must lie in [3, 64]");
    const PowerSeries s = lloyd_series(o_.p, o_.order);
    std::optional<Integer> qc;
    if (o_.p >= 5) qc = qc_sum(o_.p);
    emit(render_lloyd(o_.p, s, qc, format_));
    return !qc || s[3] == Rational(*qc) ? kExitOk : kExitConsistency;
  }

  int verify() {
    std::vector<Suite> selected;
    for (const auto& name : o_.suites) {
      if (name == "all") {
        selected = {Suite::Recursions, Suite::Oracle, Suite::Corollary, Suite::Lloyd};
        break;
      }
      const Suite s = parse_suite(name);
      if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
    }
    const u64 bound = oracle_bound_from_env();
    std::vector<SuiteResult> results;
    for (Suite s : selected) {
      // "all" caps the oracle and lloyd sweeps at their limits instead of rejecting.
      const u64 cap = o_.suites.size() == 1 && o_.suites[0] == "all" ? suite_n_max_limit(s, bound) : o_.n_max;
      results.push_back(run_suite(s, std::min(o_.n_max, cap), bound));
    }
    emit(render_verify(results, format_));
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    return ok ? kExitOk : kExitConsistency;
  }

 private:
  void emit(const std::string& text) {
    if (!o_.quiet) out_ << text;
  }

  const Options& o_;
  std::ostream& out_;
  OutputFormat format_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiplatonic cyclic group actions: QC(n) by sum, closed form and brute-force oracle",
               "quasicount"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet", o.quiet, "Suppress normal output; rely on the exit code");

  std::function<int(Runner&)> action;

  auto* qc = app.add_subcommand("qc", "QC(n) with per-signature breakdown");
  qc->add_option("n", o.n, "Group order")->required();
  qc->add_option("--method", o.method, "sum, closed, oracle or all")
      ->check(CLI::IsMember({"sum", "closed", "oracle", "all"}))
      ->capture_default_str();
  qc->callback([&] { action = &Runner::qc; });

  auto* range = app.add_subcommand("range", "QC(n), r(C_n) and genus span for a <= n <= b");
  range->add_option("a", o.range_a)->required();
  range->add_option("b", o.range_b)->required();
  range->callback([&] { action = &Runner::range; });

  auto* sigs = app.add_subcommand("signatures", "Admissible signatures of C_n with genus");
  sigs->add_option("n", o.n)->required();
  sigs->callback([&] { action = &Runner::signatures; });

  auto* tv = app.add_subcommand("tvalue", "T-value breakdown for one signature");
  tv->add_option("n", o.n)->required();
  tv->add_option("n1", o.periods[0])->required();
  tv->add_option("n2", o.periods[1])->required();
  tv->add_option("n3", o.periods[2])->required();
  tv->callback([&] { action = &Runner::tvalue; });

  auto* des = app.add_subcommand("dessins", "Number of regular dessins with group C_n");
  des->add_option("n", o.n)->required();
  des->add_flag("--check", o.check, "Compare against the orbit-counting oracle");
  des->callback([&] { action = &Runner::dessins; });

  auto* ll = app.add_subcommand("lloyd", "Lloyd generating series for Z_p");
  ll->add_option("p", o.p, "Odd prime")->required();
  ll->add_option("--order", o.order, "Truncation order")->capture_default_str();
  ll->callback([&] { action = &Runner::lloyd; });

  auto* ver = app.add_subcommand("verify", "Run the cross-check suites");
  ver->add_option("--n-max", o.n_max, "Largest modulus checked")->capture_default_str();
  ver->add_option("--suites", o.suites, "recursions, oracle, corollary, lloyd or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"recursions", "oracle", "corollary", "lloyd", "all"}))
      ->capture_default_str();
  ver->callback([&] { action = &Runner::verify; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    Runner runner(o, out);
    return action(runner);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace quasicount::cli
