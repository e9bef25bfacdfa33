#include <gtest/gtest.h>

#include "quasicount/errors.hpp"
#include "quasicount/report.hpp"

using namespace quasicount;

TEST(Report, EightAllMethods) {
  const QCReport r = build_report(8, Method::All);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].signature, Signature(2, 8, 8));
  EXPECT_EQ(r.rows[0].genus, 2u);
  EXPECT_EQ(r.rows[0].breakdown.value, 1);
  EXPECT_EQ(r.rows[1].genus, 3u);
  EXPECT_EQ(r.rows[1].breakdown.value, 2);
  EXPECT_EQ(r.qc_sum, 3);
  EXPECT_EQ(r.qc_closed, Integer(3));
  EXPECT_EQ(r.oracle_value, Integer(3));
  EXPECT_EQ(r.r_cyclic, 12);
  EXPECT_TRUE(r.consistent);
}

TEST(Report, MethodSelectsOverlays) {
  EXPECT_FALSE(build_report(8, Method::Sum).qc_closed);
  EXPECT_FALSE(build_report(8, Method::Sum).oracle_value);
  EXPECT_FALSE(build_report(8, Method::Closed).oracle_value);
  EXPECT_FALSE(build_report(6, Method::Closed).qc_closed);
  EXPECT_FALSE(build_report(3000, Method::All).oracle_value);
  EXPECT_THROW(build_report(3000, Method::Oracle), OracleBoundError);
  EXPECT_TRUE(build_report(3000, Method::All).consistent);
}

TEST(Report, RowsSumToTotal) {
  for (u64 n = 1; n <= 300; ++n) {
    const QCReport r = build_report(n, Method::Sum);
    Integer total = 0;
    for (const auto& row : r.rows) total += row.breakdown.value;
    EXPECT_EQ(total, r.qc_sum) << n;
  }
}

TEST(Report, EmptyForOne) {
  const QCReport r = build_report(1, Method::Sum);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.qc_sum, 0);
  EXPECT_NE(render_report(r, OutputFormat::Table).find("no admissible signatures"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  for (u64 n : {1u, 7u, 8u, 30u, 35u, 63u, 200u}) {
    for (Method m : {Method::Sum, Method::Closed, Method::All}) {
      const QCReport r = build_report(n, m);
      EXPECT_EQ(parse_report_json(render_report(r, OutputFormat::Json)), r) << n;
    }
  }
}

TEST(Report, CsvRoundTrip) {
  for (u64 n : {1u, 7u, 8u, 30u, 35u, 63u, 200u}) {
    for (Method m : {Method::Sum, Method::Closed, Method::All}) {
      const QCReport r = build_report(n, m);
      EXPECT_EQ(parse_report_csv(render_report(r, OutputFormat::Csv)), r) << n;
    }
  }
}

TEST(Report, JsonSchema) {
  const std::string j = render_report(build_report(7, Method::Sum), OutputFormat::Json);
  EXPECT_NE(j.find("\"n\": \"7\""), std::string::npos);
  EXPECT_NE(j.find("\"periods\""), std::string::npos);
  EXPECT_NE(j.find("\"tau2\": \"2\""), std::string::npos);
  EXPECT_NE(j.find("\"r_cn\": \"8\""), std::string::npos);
  EXPECT_EQ(j.find("\"tau1\""), std::string::npos);
  EXPECT_EQ(j.find("\"qc_closed\""), std::string::npos);
  EXPECT_EQ(j.find("\"oracle\""), std::string::npos);
}

TEST(Range, Row) {
  const RangeRow r = range_row(5);
  EXPECT_EQ(r, (RangeRow{5, 1, 6, 1, 2, 2}));
  const RangeRow empty = range_row(4);
  EXPECT_FALSE(empty.min_genus);
  EXPECT_FALSE(empty.max_genus);
  EXPECT_EQ(empty.num_signatures, 0u);
}

TEST(Range, CsvFormat) {
  EXPECT_EQ(render_range(build_range(5, 5), OutputFormat::Csv),
            "n,qc,r_cn,num_signatures,min_genus,max_genus\n5,1,6,1,2,2\n");
  EXPECT_EQ(render_range(build_range(4, 4), OutputFormat::Csv),
            "n,qc,r_cn,num_signatures,min_genus,max_genus\n4,0,6,0,,\n");
  EXPECT_THROW(build_range(0, 3), DomainError);
  EXPECT_THROW(build_range(5, 4), DomainError);
}

TEST(Range, RoundTrip) {
  const auto rows = build_range(1, 300);
  EXPECT_EQ(parse_range_csv(render_range(rows, OutputFormat::Csv)), rows);
  EXPECT_EQ(parse_range_json(render_range(rows, OutputFormat::Json)), rows);
}

TEST(Parsers, RejectMalformedInput) {
  EXPECT_THROW(parse_range_csv("n,qc\n1,0\n"), DomainError);
  EXPECT_THROW(parse_range_csv("n,qc,r_cn,num_signatures,min_genus,max_genus\n1,0\n"), DomainError);
  EXPECT_THROW(parse_range_csv("n,qc,r_cn,num_signatures,min_genus,max_genus\n-1,0,1,0,,\n"), DomainError);
  EXPECT_THROW(parse_report_json("{"), DomainError);
  EXPECT_THROW(parse_report_json("{\"n\": 7}"), DomainError);
}

TEST(Verify, SuitesPass) {
  for (Suite s : {Suite::Recursions, Suite::Oracle, Suite::Corollary, Suite::Lloyd}) {
    const SuiteResult r = run_suite(s, 120);
    EXPECT_TRUE(r.passed()) << to_string(s);
    EXPECT_GT(r.checked, 0u) << to_string(s);
  }
  EXPECT_THROW(run_suite(Suite::Recursions, 5), DomainError);
  EXPECT_THROW(run_suite(Suite::Oracle, 300, 200), DomainError);
  EXPECT_THROW(parse_suite("everything"), DomainError);
}
