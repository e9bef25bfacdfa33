#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quasicount/actions.hpp"
#include "quasicount/errors.hpp"
#include "quasicount/lloyd.hpp"
#include "quasicount/oracle.hpp"
#include "quasicount/recursions.hpp"
#include "quasicount/report.hpp"
#include "quasicount/verify.hpp"

namespace py = pybind11;
using namespace quasicount;

namespace {

py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(z).c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  return py::module_::import("fractions").attr("Fraction")(to_py(num), to_py(den));
}

template <class T>
py::object to_py(const std::optional<T>& v) {
  return v ? to_py(*v) : py::none();
}

py::tuple periods(const Signature& s) { return py::make_tuple(s[0], s[1], s[2]); }

Signature signature_of(const std::array<u64, 3>& p) { return Signature(p[0], p[1], p[2]); }

py::dict breakdown(u64 n, const TValueBreakdown& t) {
  py::dict d;
  d["periods"] = periods(t.signature);
  d["genus"] = genus(n, t.signature);
  d["case"] = std::string(to_string(t.case_tag));
  d["tau1"] = t.tau1_term ? py::cast(*t.tau1_term) : py::none();
  d["tau2"] = t.tau2_term ? py::cast(*t.tau2_term) : py::none();
  d["phi"] = t.phi_term;
  d["w_primes"] = t.w_primes;
  d["product"] = to_py(t.product_term);
  d["value"] = to_py(t.value);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasiplatonic cyclic group actions: exact counts, closed forms and oracles";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<OracleBoundError> bound_error(m, "OracleBoundError", domain_error.ptr());
  static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OracleBoundError& e) {
      bound_error(e.what());
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ConsistencyError& e) {
      consistency_error(e.what());
    }
  });

  m.attr("DEFAULT_ORACLE_BOUND") = oracle::kDefaultBound;

  m.def("factorize", [](u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    const Factorization f = factorize(n);
    for (const auto& [p, a] : f.parts()) out.emplace_back(p, a);
    return out;
  }, py::arg("n"));
  m.def("euler_phi", py::overload_cast<u64>(&euler_phi), py::arg("n"));
  m.def("tau1", &tau1_closed, py::arg("m"), py::arg("d"));
  m.def("tau2", &tau2_closed, py::arg("n"));

  m.def("is_admissible", [](u64 n, const std::array<u64, 3>& p) { return is_admissible(n, signature_of(p)); },
        py::arg("n"), py::arg("periods"));
  m.def("signatures", [](u64 n) {
    py::list out;
    for (const auto& s : enumerate_signatures(n)) out.append(periods(s));
    return out;
  }, py::arg("n"), "Admissible signatures of C_n as sorted tuples, lexicographic.");
  m.def("genus", [](u64 n, const std::array<u64, 3>& p) { return genus(n, signature_of(p)); }, py::arg("n"),
        py::arg("periods"));
  m.def("t_value", [](u64 n, const std::array<u64, 3>& p) { return breakdown(n, t_value(n, signature_of(p))); },
        py::arg("n"), py::arg("periods"));

  m.def("qc_sum", [](u64 n) { return to_py(qc_sum(n)); }, py::arg("n"));
  m.def("qc_closed", [](u64 n) { return to_py(qc_closed(n)); }, py::arg("n"),
        "None outside the closed-form domain.");
  m.def("qc_unified", [](u64 n) -> py::object {
    const auto u = qc_unified(n);
    if (!u) return py::none();
    return py::make_tuple(to_py(u->constant), to_py(u->value));
  }, py::arg("n"));
  m.def("r_cyclic", [](u64 n) { return to_py(r_cyclic(n)); }, py::arg("n"));
  m.def("corollary_constant", [](u64 n) { return to_py(corollary_constant(n)); }, py::arg("n"));
  m.def("qc_prime_power", [](u64 p, unsigned a) { return to_py(qc_prime_power(p, a)); }, py::arg("p"),
        py::arg("a"));

  m.def("qc_oracle", &oracle::qc_oracle, py::arg("n"), py::arg("bound") = oracle::kDefaultBound);
  m.def("count_classes", [](u64 n, const std::array<u64, 3>& p, u64 bound) {
    return oracle::count_classes(n, signature_of(p), bound);
  }, py::arg("n"), py::arg("periods"), py::arg("bound") = oracle::kDefaultBound);
  m.def("dessin_pairs_oracle", &oracle::dessin_pairs_oracle, py::arg("n"),
        py::arg("bound") = oracle::kDefaultBound);

  m.def("lloyd_series", [](u64 p, std::size_t order) {
    const PowerSeries s = lloyd_series(p, order);
    py::list out;
    for (const auto& c : s.coefficients()) out.append(to_py(c));
    return out;
  }, py::arg("p"), py::arg("order") = 3);

  m.def("verify", [](const std::string& suite, u64 n_max, u64 bound) {
    const SuiteResult r = run_suite(parse_suite(suite), n_max, bound);
    py::dict d;
    d["suite"] = suite;
    d["n_max"] = r.n_max;
    d["checked"] = r.checked;
    d["failed"] = r.failed;
    d["skipped"] = r.skipped;
    d["failures"] = r.failures;
    d["passed"] = r.passed();
    return d;
  }, py::arg("suite"), py::arg("n_max"), py::arg("bound") = oracle::kDefaultBound);

  m.def("report", [](u64 n, const std::string& method, const std::string& format, u64 bound) {
    return render_report(build_report(n, parse_method(method), bound), parse_format(format));
  }, py::arg("n"), py::arg("method") = "sum", py::arg("format") = "json", py::arg("bound") = oracle::kDefaultBound,
        "Rendered QC report, as the CLI's qc subcommand prints it.");
  m.def("range_table", [](u64 a, u64 b, const std::string& format) {
    return render_range(build_range(a, b), parse_format(format));
  }, py::arg("a"), py::arg("b"), py::arg("format") = "csv");
}
