#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasicount/actions.hpp"
#include "quasicount/lloyd.hpp"
#include "quasicount/oracle.hpp"
#include "quasicount/verify.hpp"

namespace quasicount {

enum class Method { Sum, Closed, Oracle, All };
enum class OutputFormat { Table, Csv, Json };

std::string_view to_string(Method m);
std::string_view to_string(OutputFormat f);
Method parse_method(std::string_view name);
OutputFormat parse_format(std::string_view name);

struct QCRow {
  Signature signature;
  u64 genus;
  TValueBreakdown breakdown;

  friend bool operator==(const QCRow&, const QCRow&) = default;
};

struct QCReport {
  u64 n;
  Method method;
  std::vector<QCRow> rows;
  Integer qc_sum;
  std::optional<Integer> qc_closed;
  Integer r_cyclic;
  std::optional<Integer> oracle_value;
  bool consistent;

  friend bool operator==(const QCReport&, const QCReport&) = default;
};

/// Sum is always computed. Closed adds qc_closed where it applies; Oracle
/// adds the oracle (OracleBoundError above the bound); All adds both, and
/// silently leaves the oracle out above the bound.
QCReport build_report(u64 n, Method method, u64 oracle_bound = oracle::kDefaultBound);

struct RangeRow {
  u64 n;
  Integer qc;
  Integer r_cn;
  std::size_t num_signatures;
  std::optional<u64> min_genus;
  std::optional<u64> max_genus;

  friend bool operator==(const RangeRow&, const RangeRow&) = default;
};

RangeRow range_row(u64 n);

/// Rows for a <= n <= b, ascending. Requires 1 <= a <= b.
std::vector<RangeRow> build_range(u64 a, u64 b);

struct SignatureRow {
  Signature signature;
  u64 genus;
};

std::string render_report(const QCReport& r, OutputFormat f);
std::string render_range(const std::vector<RangeRow>& rows, OutputFormat f);
std::string render_signatures(u64 n, const std::vector<SignatureRow>& rows, OutputFormat f);
std::string render_tvalue(u64 n, u64 genus, const TValueBreakdown& t, OutputFormat f);
std::string render_dessins(u64 n, const Integer& r, std::optional<u64> oracle_value, OutputFormat f);
std::string render_lloyd(u64 p, const PowerSeries& s, std::optional<Integer> qc, OutputFormat f);
std::string render_verify(const std::vector<SuiteResult>& results, OutputFormat f);

/// Inverses of the renderers above; throw DomainError on malformed input.
QCReport parse_report_json(std::string_view text);
QCReport parse_report_csv(std::string_view text);
std::vector<RangeRow> parse_range_json(std::string_view text);
std::vector<RangeRow> parse_range_csv(std::string_view text);

}  // namespace quasicount
