#include "quasicount/report.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "quasicount/errors.hpp"

namespace quasicount {

using json = nlohmann::ordered_json;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Sum: return "sum";
    case Method::Closed: return "closed";
    case Method::Oracle: return "oracle";
    case Method::All: return "all";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Sum, Method::Closed, Method::Oracle, Method::All}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  for (OutputFormat f : {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("unknown format '" + std::string(name) + "'");
}

QCReport build_report(u64 n, Method method, u64 oracle_bound) {
  if (n == 0) throw DomainError("n must be positive");
  QCReport r{n, method, {}, 0, std::nullopt, r_cyclic(n), std::nullopt, true};
  for (const Signature& sig : enumerate_signatures(n)) {
    QCRow row{sig, genus(n, sig), t_value(n, sig)};
    r.qc_sum += row.breakdown.value;
    r.rows.push_back(std::move(row));
  }
  if (method == Method::Closed || method == Method::All) r.qc_closed = qc_closed(n);
  if (method == Method::Oracle || (method == Method::All && n <= oracle_bound)) {
    r.oracle_value = Integer(oracle::qc_oracle(n, oracle_bound));
  }
  r.consistent = (!r.qc_closed || *r.qc_closed == r.qc_sum) && (!r.oracle_value || *r.oracle_value == r.qc_sum);
  return r;
}

RangeRow range_row(u64 n) {
  if (n == 0) throw DomainError("n must be positive");
  RangeRow row{n, 0, r_cyclic(n), 0, std::nullopt, std::nullopt};
  for (const Signature& sig : enumerate_signatures(n)) {
    const u64 g = genus(n, sig);
    row.qc += t_value(n, sig).value;
    ++row.num_signatures;
    row.min_genus = row.min_genus ? std::min(*row.min_genus, g) : g;
    row.max_genus = row.max_genus ? std::max(*row.max_genus, g) : g;
  }
  return row;
}

std::vector<RangeRow> build_range(u64 a, u64 b) {
  if (a == 0 || a > b) throw DomainError("range requires 1 <= a <= b");
  std::vector<RangeRow> rows;
  rows.reserve(b - a + 1);
  for (u64 n = a; n <= b; ++n) rows.push_back(range_row(n));
  return rows;
}

namespace {

// ---- text helpers ----

std::string str(u64 v) { return std::to_string(v); }
std::string str(const Integer& v) { return to_string(v); }
std::string str(const Rational& v) { return to_string(v); }

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? str(*v) : std::string();
}

std::string join(const std::vector<u64>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width(rows_[0].size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// ---- CSV ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + '\n';
}

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw DomainError("csv: unterminated quote");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Header-indexed view of parsed CSV.
class CsvTable {
 public:
  CsvTable(std::string_view text, const std::vector<std::string>& expected) {
    rows_ = csv_parse(text);
    if (rows_.empty() || rows_[0] != expected) throw DomainError("csv: unexpected header");
    for (std::size_t i = 0; i < expected.size(); ++i) index_.push_back(expected[i]);
    for (std::size_t r = 1; r < rows_.size(); ++r) {
      if (rows_[r].size() != expected.size()) throw DomainError("csv: ragged row " + std::to_string(r));
    }
  }

  std::size_t size() const { return rows_.size() - 1; }

  const std::string& at(std::size_t row, std::string_view column) const {
    const auto it = std::find(index_.begin(), index_.end(), column);
    return rows_[row + 1][static_cast<std::size_t>(it - index_.begin())];
  }

 private:
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> index_;
};

// ---- parsing scalars ----

Integer parse_integer(std::string_view s) {
  const Rational q = parse_rational(s);
  if (!is_integral(q) || s.find('/') != std::string_view::npos) {
    throw DomainError("not an integer: '" + std::string(s) + "'");
  }
  return numerator(q);
}

u64 parse_u64(std::string_view s) {
  const Integer z = parse_integer(s);
  if (z < 0 || z > std::numeric_limits<u64>::max()) throw DomainError("out of range: '" + std::string(s) + "'");
  return static_cast<u64>(z);
}

std::vector<u64> parse_list(std::string_view s, char sep) {
  std::vector<u64> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(parse_u64(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

SignatureCase parse_case(std::string_view s) {
  for (auto c : {SignatureCase::AllDistinct, SignatureCase::TwoEqual, SignatureCase::AllEqual}) {
    if (s == to_string(c)) return c;
  }
  throw DomainError("unknown case '" + std::string(s) + "'");
}

template <class T, class F>
std::optional<T> parse_opt(std::string_view s, F f) {
  if (s.empty()) return std::nullopt;
  return f(s);
}

// ---- JSON ----

json strings(const std::vector<u64>& xs) {
  json a = json::array();
  for (u64 x : xs) a.push_back(std::to_string(x));
  return a;
}

json signature_json(u64 genus, const TValueBreakdown& t) {
  const auto& p = t.signature.periods();
  json j;
  j["periods"] = strings({p.begin(), p.end()});
  j["genus"] = str(genus);
  j["case"] = std::string(to_string(t.case_tag));
  j["t_value"] = str(t.value);
  if (t.tau1_term) j["tau1"] = str(*t.tau1_term);
  if (t.tau2_term) j["tau2"] = str(*t.tau2_term);
  j["w_primes"] = strings(t.w_primes);
  j["phi"] = str(t.phi_term);
  j["product"] = str(t.product_term);
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const json& j) {
  if (!j.is_string()) throw DomainError("json: expected a decimal string");
  return j.get<std::string>();
}

std::optional<std::string> optional_text(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return text_of(j.at(key));
}

std::vector<u64> u64_list(const json& j) {
  if (!j.is_array()) throw DomainError("json: expected an array");
  std::vector<u64> out;
  for (const auto& e : j) out.push_back(parse_u64(text_of(e)));
  return out;
}

Signature signature_from(const std::vector<u64>& p) {
  if (p.size() != 3) throw DomainError("signature needs three periods");
  return Signature(p[0], p[1], p[2]);
}

QCRow row_from_json(const json& j) {
  const Signature sig = signature_from(u64_list(field(j, "periods")));
  TValueBreakdown t{sig,
                    parse_case(text_of(field(j, "case"))),
                    std::nullopt,
                    std::nullopt,
                    parse_u64(text_of(field(j, "phi"))),
                    u64_list(field(j, "w_primes")),
                    parse_rational(text_of(field(j, "product"))),
                    parse_integer(text_of(field(j, "t_value")))};
  if (auto s = optional_text(j, "tau1")) t.tau1_term = parse_u64(*s);
  if (auto s = optional_text(j, "tau2")) t.tau2_term = parse_u64(*s);
  return QCRow{sig, parse_u64(text_of(field(j, "genus"))), std::move(t)};
}

json range_json(const RangeRow& r) {
  json j;
  j["n"] = str(r.n);
  j["qc"] = str(r.qc);
  j["r_cn"] = str(r.r_cn);
  j["num_signatures"] = std::to_string(r.num_signatures);
  if (r.min_genus) j["min_genus"] = str(*r.min_genus);
  if (r.max_genus) j["max_genus"] = str(*r.max_genus);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + '\n'; }

// ---- shared column sets ----

const std::vector<std::string> kReportCsvHeader = {
    "record", "n",     "method", "n1",     "n2",      "n3",      "genus",     "case",   "t_value", "tau1",
    "tau2",   "phi",   "w_primes", "product", "qc_sum", "qc_closed", "r_cn", "oracle",  "consistent"};

const std::vector<std::string> kRangeCsvHeader = {"n", "qc", "r_cn", "num_signatures", "min_genus", "max_genus"};

std::vector<std::string> breakdown_cells(const TValueBreakdown& t) {
  return {std::string(to_string(t.case_tag)), opt_str(t.tau1_term), opt_str(t.tau2_term), str(t.phi_term),
          join(t.w_primes, ';'), str(t.product_term), str(t.value)};
}

std::string verdict(const QCReport& r) {
  if (!r.qc_closed && !r.oracle_value) return {};
  return r.consistent ? "all methods agree" : "METHODS DISAGREE";
}

}  // namespace

std::string render_report(const QCReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j;
      j["n"] = str(r.n);
      j["method"] = std::string(to_string(r.method));
      j["signatures"] = json::array();
      for (const auto& row : r.rows) j["signatures"].push_back(signature_json(row.genus, row.breakdown));
      j["qc_sum"] = str(r.qc_sum);
      if (r.qc_closed) j["qc_closed"] = str(*r.qc_closed);
      j["r_cn"] = str(r.r_cyclic);
      if (r.oracle_value) j["oracle"] = str(*r.oracle_value);
      j["consistent"] = r.consistent;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = csv_line(kReportCsvHeader);
      for (const auto& row : r.rows) {
        const auto& p = row.signature.periods();
        const auto& t = row.breakdown;
        out += csv_line({"signature", str(r.n), "", str(p[0]), str(p[1]), str(p[2]), str(row.genus),
                         std::string(to_string(t.case_tag)), str(t.value), opt_str(t.tau1_term),
                         opt_str(t.tau2_term), str(t.phi_term), join(t.w_primes, ';'), str(t.product_term), "", "",
                         "", "", ""});
      }
      out += csv_line({"total", str(r.n), std::string(to_string(r.method)), "", "", "", "", "", "", "", "", "", "",
                       "", str(r.qc_sum), opt_str(r.qc_closed), str(r.r_cyclic), opt_str(r.oracle_value),
                       r.consistent ? "true" : "false"});
      return out;
    }
    case OutputFormat::Table: {
      std::string out = "QC(" + str(r.n) + ") by method " + std::string(to_string(r.method)) + "\n\n";
      if (r.rows.empty()) {
        out += "no admissible signatures\n";
      } else {
        TextTable t({"signature", "genus", "case", "tau1", "tau2", "phi", "w", "product", "T"});
        for (const auto& row : r.rows) {
          std::vector<std::string> cells{row.signature.to_string(), str(row.genus)};
          for (auto& c : breakdown_cells(row.breakdown)) cells.push_back(std::move(c));
          t.add(std::move(cells));
        }
        out += t.str();
      }
      out += '\n';
      TextTable totals({"sum", str(r.qc_sum)});
      if (r.qc_closed) totals.add({"closed", str(*r.qc_closed)});
      else if (r.method == Method::Closed || r.method == Method::All) totals.add({"closed", "n/a"});
      if (r.oracle_value) totals.add({"oracle", str(*r.oracle_value)});
      else if (r.method == Method::All) totals.add({"oracle", "n/a"});
      totals.add({"r(C_n)", str(r.r_cyclic)});
      if (const auto v = verdict(r); !v.empty()) totals.add({"verdict", v});
      return out + totals.str();
    }
  }
  return {};
}

QCReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  QCReport r{parse_u64(text_of(field(j, "n"))),
             parse_method(text_of(field(j, "method"))),
             {},
             parse_integer(text_of(field(j, "qc_sum"))),
             std::nullopt,
             parse_integer(text_of(field(j, "r_cn"))),
             std::nullopt,
             false};
  for (const auto& s : field(j, "signatures")) r.rows.push_back(row_from_json(s));
  if (auto s = optional_text(j, "qc_closed")) r.qc_closed = parse_integer(*s);
  if (auto s = optional_text(j, "oracle")) r.oracle_value = parse_integer(*s);
  const json& c = field(j, "consistent");
  if (!c.is_boolean()) throw DomainError("json: 'consistent' must be a boolean");
  r.consistent = c.get<bool>();
  return r;
}

QCReport parse_report_csv(std::string_view text) {
  const CsvTable t(text, kReportCsvHeader);
  if (t.size() == 0 || t.at(t.size() - 1, "record") != "total") throw DomainError("csv: missing total row");
  const std::size_t last = t.size() - 1;
  QCReport r{parse_u64(t.at(last, "n")),
             parse_method(t.at(last, "method")),
             {},
             parse_integer(t.at(last, "qc_sum")),
             parse_opt<Integer>(t.at(last, "qc_closed"), parse_integer),
             parse_integer(t.at(last, "r_cn")),
             parse_opt<Integer>(t.at(last, "oracle"), parse_integer),
             t.at(last, "consistent") == "true"};
  for (std::size_t i = 0; i < last; ++i) {
    if (t.at(i, "record") != "signature") throw DomainError("csv: unexpected record type");
    const Signature sig(parse_u64(t.at(i, "n1")), parse_u64(t.at(i, "n2")), parse_u64(t.at(i, "n3")));
    TValueBreakdown b{sig,
                      parse_case(t.at(i, "case")),
                      parse_opt<u64>(t.at(i, "tau1"), parse_u64),
                      parse_opt<u64>(t.at(i, "tau2"), parse_u64),
                      parse_u64(t.at(i, "phi")),
                      parse_list(t.at(i, "w_primes"), ';'),
                      parse_rational(t.at(i, "product")),
                      parse_integer(t.at(i, "t_value"))};
    r.rows.push_back(QCRow{sig, parse_u64(t.at(i, "genus")), std::move(b)});
  }
  return r;
}

std::string render_range(const std::vector<RangeRow>& rows, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json a = json::array();
      for (const auto& r : rows) a.push_back(range_json(r));
      return dump(a);
    }
    case OutputFormat::Csv: {
      std::string out = csv_line(kRangeCsvHeader);
      for (const auto& r : rows) {
        out += csv_line({str(r.n), str(r.qc), str(r.r_cn), std::to_string(r.num_signatures), opt_str(r.min_genus),
                         opt_str(r.max_genus)});
      }
      return out;
    }
    case OutputFormat::Table: {
      TextTable t({"n", "QC", "r(C_n)", "signatures", "min genus", "max genus"});
      for (const auto& r : rows) {
        t.add({str(r.n), str(r.qc), str(r.r_cn), std::to_string(r.num_signatures),
               r.min_genus ? str(*r.min_genus) : "-", r.max_genus ? str(*r.max_genus) : "-"});
      }
      return t.str();
    }
  }
  return {};
}

std::vector<RangeRow> parse_range_csv(std::string_view text) {
  const CsvTable t(text, kRangeCsvHeader);
  std::vector<RangeRow> rows;
  for (std::size_t i = 0; i < t.size(); ++i) {
    rows.push_back(RangeRow{parse_u64(t.at(i, "n")), parse_integer(t.at(i, "qc")), parse_integer(t.at(i, "r_cn")),
                            static_cast<std::size_t>(parse_u64(t.at(i, "num_signatures"))),
                            parse_opt<u64>(t.at(i, "min_genus"), parse_u64),
                            parse_opt<u64>(t.at(i, "max_genus"), parse_u64)});
  }
  return rows;
}

std::vector<RangeRow> parse_range_json(std::string_view text) {
  json a;
  try {
    a = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  if (!a.is_array()) throw DomainError("json: expected an array of rows");
  std::vector<RangeRow> rows;
  for (const auto& j : a) {
    RangeRow r{parse_u64(text_of(field(j, "n"))), parse_integer(text_of(field(j, "qc"))),
               parse_integer(text_of(field(j, "r_cn"))),
               static_cast<std::size_t>(parse_u64(text_of(field(j, "num_signatures")))), std::nullopt,
               std::nullopt};
    if (auto s = optional_text(j, "min_genus")) r.min_genus = parse_u64(*s);
    if (auto s = optional_text(j, "max_genus")) r.max_genus = parse_u64(*s);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_signatures(u64 n, const std::vector<SignatureRow>& rows, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j;
      j["n"] = str(n);
      j["signatures"] = json::array();
      for (const auto& r : rows) {
        const auto& p = r.signature.periods();
        j["signatures"].push_back({{"periods", strings({p.begin(), p.end()})}, {"genus", str(r.genus)}});
      }
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"n", "n1", "n2", "n3", "genus"});
      for (const auto& r : rows) {
        out += csv_line({str(n), str(r.signature[0]), str(r.signature[1]), str(r.signature[2]), str(r.genus)});
      }
      return out;
    }
    case OutputFormat::Table: {
      if (rows.empty()) return "no admissible signatures for n = " + str(n) + "\n";
      TextTable t({"signature", "genus"});
      for (const auto& r : rows) t.add({r.signature.to_string(), str(r.genus)});
      return t.str();
    }
  }
  return {};
}

std::string render_tvalue(u64 n, u64 genus, const TValueBreakdown& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j = signature_json(genus, t);
      j["n"] = str(n);
      return dump(j);
    }
    case OutputFormat::Csv: {
      const auto& p = t.signature.periods();
      std::vector<std::string> cells{str(n), str(p[0]), str(p[1]), str(p[2]), str(genus)};
      for (auto& c : breakdown_cells(t)) cells.push_back(std::move(c));
      return csv_line({"n", "n1", "n2", "n3", "genus", "case", "tau1", "tau2", "phi", "w_primes", "product",
                       "t_value"}) +
             csv_line(cells);
    }
    case OutputFormat::Table: {
      TextTable tt({"n", str(n)});
      tt.add({"signature", t.signature.to_string()});
      tt.add({"genus", str(genus)});
      tt.add({"case", std::string(to_string(t.case_tag))});
      if (t.tau1_term) tt.add({"tau1", str(*t.tau1_term)});
      if (t.tau2_term) tt.add({"tau2", str(*t.tau2_term)});
      tt.add({"phi", str(t.phi_term)});
      tt.add({"w primes", t.w_primes.empty() ? "-" : join(t.w_primes, ' ')});
      tt.add({"product", str(t.product_term)});
      tt.add({"T", str(t.value)});
      return tt.str();
    }
  }
  return {};
}

std::string render_dessins(u64 n, const Integer& r, std::optional<u64> oracle_value, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      json j{{"n", str(n)}, {"r_cn", str(r)}};
      if (oracle_value) j["oracle"] = str(*oracle_value);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"n", "r_cn", "oracle"}) + csv_line({str(n), str(r), opt_str(oracle_value)});
    case OutputFormat::Table: {
      TextTable t({"n", str(n)});
      t.add({"r(C_n)", str(r)});
      if (oracle_value) t.add({"oracle", str(*oracle_value)});
      return t.str();
    }
  }
  return {};
}

std::string render_lloyd(u64 p, const PowerSeries& s, std::optional<Integer> qc, OutputFormat f) {
  const auto qc_cell = [&](std::size_t rho) { return rho == 3 && qc ? str(*qc) : std::string(); };
  switch (f) {
    case OutputFormat::Json: {
      json j{{"p", str(p)}, {"order", std::to_string(s.order())}};
      j["coefficients"] = json::array();
      for (const auto& c : s.coefficients()) j["coefficients"].push_back(str(c));
      if (qc) j["qc"] = str(*qc);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"p", "rho", "coefficient", "qc"});
      for (std::size_t rho = 0; rho <= s.order(); ++rho) {
        out += csv_line({str(p), std::to_string(rho), str(s[rho]), qc_cell(rho)});
      }
      return out;
    }
    case OutputFormat::Table: {
      TextTable t({"rho", "coefficient", "QC(p)"});
      for (std::size_t rho = 0; rho <= s.order(); ++rho) t.add({std::to_string(rho), str(s[rho]), qc_cell(rho)});
      return "p = " + str(p) + "\n" + t.str();
    }
  }
  return {};
}

std::string render_verify(const std::vector<SuiteResult>& results, OutputFormat f) {
  const bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  switch (f) {
    case OutputFormat::Json: {
      json j{{"passed", all_passed}, {"suites", json::array()}};
      for (const auto& r : results) {
        j["suites"].push_back({{"suite", std::string(to_string(r.suite))},
                               {"n_max", str(r.n_max)},
                               {"checked", std::to_string(r.checked)},
                               {"failed", std::to_string(r.failed)},
                               {"skipped", std::to_string(r.skipped)},
                               {"passed", r.passed()},
                               {"failures", r.failures}});
      }
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string out = csv_line({"suite", "n_max", "checked", "failed", "skipped", "passed", "failures"});
      for (const auto& r : results) {
        std::string failures;
        for (std::size_t i = 0; i < r.failures.size(); ++i) failures += (i ? "; " : "") + r.failures[i];
        out += csv_line({std::string(to_string(r.suite)), str(r.n_max), std::to_string(r.checked),
                         std::to_string(r.failed), std::to_string(r.skipped), r.passed() ? "true" : "false",
                         failures});
      }
      return out;
    }
    case OutputFormat::Table: {
      TextTable t({"suite", "n_max", "checked", "failed", "skipped", "status"});
      for (const auto& r : results) {
        t.add({std::string(to_string(r.suite)), str(r.n_max), std::to_string(r.checked), std::to_string(r.failed),
               std::to_string(r.skipped), r.passed() ? "PASS" : "FAIL"});
      }
      std::string out = t.str();
      for (const auto& r : results) {
        for (const auto& line : r.failures) out += std::string(to_string(r.suite)) + ": " + line + '\n';
      }
      return out + (all_passed ? "all suites pass\n" : "FAILURES\n");
    }
  }
  return {};
}

}  // namespace quasicount
