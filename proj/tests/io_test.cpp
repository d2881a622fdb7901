#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "fiscalstab/config.hpp"
#include "fiscalstab/csv.hpp"
#include "fiscalstab/decimal.hpp"
#include "fiscalstab/error.hpp"
#include "fiscalstab/report.hpp"
#include "json.hpp"

namespace io = fiscalstab::io;

TEST(Decimal, ParseAndPrint) {
  EXPECT_EQ(io::Decimal::parse("39388.9").to_string(), "39388.9");
  EXPECT_EQ(io::Decimal::parse("-0.50").to_string(), "-0.5");
  EXPECT_EQ(io::Decimal::parse("+12").to_string(), "12");
  EXPECT_EQ(io::Decimal::parse("0.000").to_string(), "0");
  EXPECT_EQ(io::Decimal::parse("1.50"), io::Decimal::parse("1.5"));
  EXPECT_EQ(io::Decimal::parse("0000000000000000000012.5").to_string(), "12.5");
  for (const char* bad : {"", "1e3", "1.2.3", "abc", "1,5", "1234567890123456789", "."}) {
    EXPECT_THROW(io::Decimal::parse(bad), fiscalstab::InputError) << bad;
  }
}

TEST(Decimal, ExactTotals) {
  io::Decimal sum;
  for (const char* v : {"39388.9", "42106.5", "44315.1", "46244.8"}) sum += io::Decimal::parse(v);
  EXPECT_EQ(sum.to_string(), "172055.3");
  EXPECT_EQ(sum.to_double(), 172055.3);
  io::Decimal tenths;
  for (int i = 0; i < 10; ++i) tenths += io::Decimal::parse("0.1");
  EXPECT_EQ(tenths.to_string(), "1");
}

TEST(Decimal, OverflowIsReported) {
  const auto big = io::Decimal::parse("999999999999999999");
  EXPECT_THROW(big + io::Decimal::parse("0.5"), fiscalstab::NumericError);
  io::Decimal total;
  EXPECT_THROW(
      for (int i = 0; i < 10; ++i) total += big, fiscalstab::NumericError);
}

TEST(Csv, WageColumnSumsExactly) {
  const auto doc = io::read_csv(std::string(FISCALSTAB_TEST_DATA) + "/wages.csv");
  EXPECT_EQ(io::exact_column_sum(doc, "wages").to_string(), "172055.3");
  EXPECT_THROW(io::exact_column_sum(doc, "salary"), fiscalstab::InputError);
}

TEST(Csv, StructuralErrors) {
  EXPECT_THROW(io::parse_csv("a,b\n1,2,3\n"), fiscalstab::InputError);
  EXPECT_THROW(io::parse_csv("a,a\n1,2\n"), fiscalstab::InputError);
  EXPECT_THROW(io::parse_csv("a,,b\n1,2,3\n"), fiscalstab::InputError);
  const auto doc = io::parse_csv("\xEF\xBB\xBFx, y\n# note\n\n1 , 2\n");
  EXPECT_EQ(doc.header[0], "x");
  EXPECT_EQ(doc.header[1], "y");
  ASSERT_EQ(doc.rows.size(), 1u);
  EXPECT_EQ(doc.lines[0], 4u);
}

TEST(Csv, NumberParsing) {
  EXPECT_EQ(io::parse_number("-1.25", 1, "x"), -1.25);
  for (const char* bad : {"1,000", "inf", "nan", "12abc", ""}) {
    EXPECT_THROW(io::parse_number(bad, 3, "x"), fiscalstab::InputError) << bad;
  }
}

TEST(Observations, ParsesAllOptionalColumns) {
  const auto table = io::ingest_csv(std::string(FISCALSTAB_TEST_DATA) + "/observations.csv");
  ASSERT_EQ(table.rows.size(), 3u);
  const auto& r = table.rows[0];
  EXPECT_EQ(r.year, 2018);
  EXPECT_EQ(r.y_current, 105.0);
  EXPECT_EQ(*r.debt_ratio, 0.55);
  EXPECT_EQ(*r.t[3], 10.0);
  EXPECT_EQ(*r.eps_t[0], 1.2);
  EXPECT_FALSE(r.eps_v.has_value());
  EXPECT_NO_THROW(io::require_disaggregate_columns(table));
  EXPECT_NO_THROW(io::require_debt_ratio(table));
}

TEST(Observations, ErrorsNameTheRowAndColumn) {
  auto message = [](const std::string& text) {
    try {
      io::to_observation_table(io::parse_csv(text));
    } catch (const fiscalstab::InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const std::string head = "year,y_current,y_potential,revenue,expenditure\n";
  EXPECT_NE(message("year,y_current,revenue,expenditure\n2019,1,1,1\n").find("y_potential"),
            std::string::npos);
  const auto bad_cell = message(head + "2019,100,abc,40,41\n");
  EXPECT_NE(bad_cell.find("row 2"), std::string::npos) << bad_cell;
  EXPECT_NE(bad_cell.find("y_potential"), std::string::npos) << bad_cell;
  const auto dup = message(head + "2019,100,100,40,41\n2019,101,100,40,41\n");
  EXPECT_NE(dup.find("duplicate year 2019"), std::string::npos) << dup;
  EXPECT_NE(dup.find("row 3"), std::string::npos) << dup;
  EXPECT_NE(message(head + "2019.5,100,100,40,41\n").find("year"), std::string::npos);
}

TEST(Observations, MissingOptionalFieldsAreReported) {
  const auto table = io::to_observation_table(
      io::parse_csv("year,y_current,y_potential,revenue,expenditure\n2019,100,100,40,41\n"));
  EXPECT_THROW(io::require_disaggregate_columns(table), fiscalstab::InputError);
  EXPECT_THROW(io::require_debt_ratio(table), fiscalstab::InputError);
}

TEST(Config, OverridesAndErrors) {
  const auto cfg = io::parse_config(
      "# tighter rules\neps_v = 1.1\ndeficit_ceiling=0.02\nformat = json\ntol_ode = 1e-10\n");
  EXPECT_EQ(cfg.elasticities.epsilon_v, 1.1);
  EXPECT_EQ(cfg.elasticities.epsilon_c, 0.0);
  EXPECT_EQ(cfg.compliance.deficit_ceiling, 0.02);
  EXPECT_EQ(cfg.tolerances.ode, 1e-10);
  EXPECT_EQ(cfg.format, io::Format::json);
  EXPECT_THROW(io::parse_config("colour = red\n"), fiscalstab::InputError);
  EXPECT_THROW(io::parse_config("eps_v\n"), fiscalstab::InputError);
  EXPECT_THROW(io::parse_config("eps_v = x\n"), fiscalstab::InputError);
  EXPECT_THROW(io::parse_config("format = xml\n"), fiscalstab::InputError);
  auto bad = cfg;
  bad.tolerances.gradient = -1.0;
  EXPECT_THROW(io::validate(bad), fiscalstab::Error);
}

TEST(Report, NumbersRoundTrip) {
  EXPECT_EQ(io::format_number(0.05), "0.05");
  EXPECT_EQ(io::format_number(-0.0), "0");
  EXPECT_EQ(io::format_number(1296.0), "1296");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(io::format_number(x)), x);
}

TEST(Report, RenderFormats) {
  io::Report r("demo");
  r.inputs.push_back({"y", 105.0});
  r.columns = {"year", "value", "ok"};
  r.add_row({std::int64_t{2019}, 0.5, true});
  r.add_row({std::int64_t{2020}, -1.25, false});
  r.summary.push_back({"n", std::int64_t{2}});
  r.warn("w1", "first");
  r.warn("w1", "duplicate is dropped");
  EXPECT_THROW(r.add_row({1.0}), fiscalstab::Error);

  const auto j = nlohmann::json::parse(io::render(r, io::Format::json));
  EXPECT_EQ(j["command"], "demo");
  EXPECT_EQ(j["inputs"][0]["name"], "y");
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][1]["value"], -1.25);
  EXPECT_EQ(j["results"][0]["ok"], true);
  EXPECT_EQ(j["summary"]["n"], 2);
  EXPECT_EQ(j["warnings"].size(), 1u);

  EXPECT_EQ(io::render(r, io::Format::csv), "year,value,ok\n2019,0.5,true\n2020,-1.25,false\n");
  const auto text = io::render(r, io::Format::text);
  EXPECT_NE(text.find("year\tvalue\tok"), std::string::npos);
  EXPECT_NE(text.find("n: 2"), std::string::npos);
}

TEST(Report, CsvOutputReadsBackAsObservations) {
  io::Report r("balance");
  r.columns = {"year", "y_current", "y_potential", "revenue", "expenditure", "sbs"};
  r.add_row({std::int64_t{2019}, 105.0, 100.0, 40.0, 41.0, -3.2});
  const auto table = io::to_observation_table(io::parse_csv(io::render(r, io::Format::csv)));
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0].year, 2019);
  EXPECT_EQ(table.rows[0].revenue, 40.0);
}
