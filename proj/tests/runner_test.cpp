#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "zdcert/config.hpp"
#include "zdcert/error.hpp"
#include "zdcert/report.hpp"
#include "zdcert/runner.hpp"

namespace {

using namespace zdcert;

config::RunConfig quick(std::vector<std::string> tasks) {
  config::RunConfig c;
  c.tasks = std::move(tasks);
  c.cond2_step_a = c.cond2_step_b = 0.05;
  c.cond2_step_t = 0.02;
  c.property_samples = 50;
  return c;
}

std::string records(const report::Report& rep) {
  std::ostringstream os;
  report::emit_records(rep, os);
  return os.str();
}

const report::Record* find(const report::Report& rep, const std::string& id) {
  for (const auto& r : rep.records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

TEST(Config, EchoRoundTrips) {
  auto c = config::parse_string(
      "tasks = cond2, case-analysis\n"
      "# comment\n"
      "cond2.step_t = 0.0025\n"
      "cond2.regions = 1, 1w\n"
      "extremal.caps = 2*0.631, 3*0.609, 0.1\n"
      "extremal.B = 3.5714285714285716\n"
      "property.seed = 4294967295\n"
      "cases.sensitivity = true\n"
      "output.format = records\n");
  EXPECT_EQ(c.extremal_caps.size(), 6u);
  EXPECT_EQ(c.cond2_regions, (std::vector<std::string>{"1", "1w"}));
  EXPECT_EQ(config::parse_string(config::echo(c)), c);
  EXPECT_EQ(config::parse_string(config::echo(config::RunConfig{})), config::RunConfig{});
}

TEST(Config, TaskKeywords) {
  EXPECT_TRUE(config::parse_string("tasks = none\n").tasks.empty());
  EXPECT_EQ(config::parse_string("tasks = all\n").tasks.size(), std::size(config::kTaskNames));
  const auto c = config::parse_string("tasks = none\n");
  EXPECT_EQ(config::parse_string(config::echo(c)), c);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(config::parse_string("cond2.stepa = 0.01\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cond2.step_a = fast\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cond2.step_a = 0.01x\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cond2.step_a = 0\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cond2.margin = -1\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cond2.regions = 4\n"), ConfigError);
  EXPECT_THROW(config::parse_string("tasks = kernel, plot\n"), ConfigError);
  EXPECT_THROW(config::parse_string("cases.sensitivity = yes\n"), ConfigError);
  EXPECT_THROW(config::parse_string("output.format = xml\n"), ConfigError);
  EXPECT_THROW(config::parse_string("report.version = 2\n"), ConfigError);
  EXPECT_THROW(config::parse_string("property.seed = -1\n"), ConfigError);
  EXPECT_THROW(config::parse_string("extremal.caps = x*0.5\n"), ConfigError);
  EXPECT_THROW(config::parse_string("just words\n"), ConfigError);
  EXPECT_THROW(config::load("/nonexistent/zdcert.conf"), ConfigError);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(report::format_number(0.1), "0.1");
  EXPECT_EQ(report::format_number(22.281), "22.281");
  EXPECT_EQ(report::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(report::format_number(4.3558e-4), "0.00043558");
  EXPECT_EQ(report::format_number(1e-20), "1e-20");
  EXPECT_EQ(report::format_number(-2.5), "-2.5");
  EXPECT_EQ(report::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_DOUBLE_EQ(report::round12(0.1 + 0.2), 0.3);
}

TEST(Report, EmptySelectionIsHeaderOnly) {
  const auto rep = runner::run(quick({}));
  EXPECT_TRUE(rep.records.empty());
  EXPECT_FALSE(rep.verdict);
  const auto text = records(rep);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  const auto head = nlohmann::json::parse(text);
  EXPECT_EQ(head["schema"], report::kSchema);
  EXPECT_EQ(head["tool_version"], report::kToolVersion);
  EXPECT_EQ(runner::exit_code(rep), runner::kExitOk);

  std::ostringstream table;
  report::emit_table(rep, table);
  EXPECT_EQ(table.str(), std::string("# ") + report::kSchema + "  zdcert " + report::kToolVersion + "\n");
}

TEST(Report, StructuredOutputIsDeterministic) {
  const auto c = quick({"kernel", "density-table", "extremal"});
  EXPECT_EQ(records(runner::run(c)), records(runner::run(c)));
}

TEST(Report, RecordsCarryTheSixFields) {
  const auto rep = runner::run(quick({"density-table"}));
  std::istringstream in(records(rep));
  std::string line;
  std::getline(in, line);
  bool saw_e0 = false;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    ASSERT_EQ(j.size(), 6u) << line;
    for (const char* k : {"id", "value", "paper_value", "citation", "tag", "pass"}) EXPECT_TRUE(j.contains(k)) << k;
    if (j["id"] == "cor1.E0") {
      saw_e0 = true;
      EXPECT_NEAR(j["value"].get<double>(), 22.28, 0.01);
      EXPECT_EQ(j["paper_value"].get<double>(), 22.281);
      EXPECT_EQ(j["citation"], "Corollary 1");
      EXPECT_EQ(j["tag"], "published");
      EXPECT_TRUE(j["pass"].get<bool>());
    }
  }
  EXPECT_TRUE(saw_e0);
}

TEST(Report, VerdictCarriesTheExponent) {
  const auto rep = runner::run(quick({"case-analysis"}));
  ASSERT_TRUE(rep.verdict);
  EXPECT_DOUBLE_EQ(report::round12(rep.verdict->exponent), 0.72);
  EXPECT_TRUE(rep.verdict->certified);
  EXPECT_GE(rep.verdict->c0, 9e-5);
  const auto text = records(rep);
  const auto last = text.substr(text.rfind('\n', text.size() - 2) + 1);
  const auto j = nlohmann::json::parse(last);
  EXPECT_EQ(j["id"], "verdict");
  EXPECT_EQ(j["exponent"].get<double>(), 0.72);
}

TEST(Runner, MarginAboveSlackFails) {
  auto c = quick({"cond2"});
  c.cond2_regions = {"3"};
  c.cond2_margin = 1.0;
  const auto rep = runner::run(c);
  const auto* r = find(rep, "cond2.region3.min_nontrivial_slack");
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->pass);
  EXPECT_EQ(runner::exit_code(rep), runner::kExitFailure);
}

TEST(Runner, AcceptanceSummaries) {
  const auto rep = runner::run(quick({"kernel", "extremal"}));
  const auto* k = find(rep, "acceptance.1");
  const auto* p = find(rep, "acceptance.9");
  ASSERT_NE(k, nullptr);
  ASSERT_NE(p, nullptr);
  EXPECT_TRUE(k->pass);
  EXPECT_TRUE(p->pass);
  EXPECT_EQ(find(rep, "acceptance.7"), nullptr);
}

TEST(Runner, FilterCase) {
  auto rep = runner::run(quick({"case-analysis"}));
  runner::filter_case(rep, 4);
  EXPECT_FALSE(rep.verdict);
  ASSERT_FALSE(rep.records.empty());
  EXPECT_NE(find(rep, "bmax.case4"), nullptr);
  EXPECT_NE(find(rep, "combine.S"), nullptr);
  EXPECT_EQ(find(rep, "case7.S"), nullptr);

  auto rep8 = runner::run(quick({"case-analysis"}));
  runner::filter_case(rep8, 8);
  EXPECT_NE(find(rep8, "case8.sweep_max_S"), nullptr);
  EXPECT_EQ(find(rep8, "combine.S"), nullptr);
}

TEST(Runner, SolveExtremal) {
  auto c = quick({});
  EXPECT_THROW(runner::solve_extremal(c), ConfigError);
  c.extremal_caps = config::parse_caps("caps", "2*0.631, 734*0.609");
  c.extremal_budget = 2.44666591546;
  const auto rep = runner::solve_extremal(c);
  EXPECT_EQ(runner::exit_code(rep), runner::kExitOk);
  ASSERT_NE(find(rep, "extremal.crossover"), nullptr);
  EXPECT_EQ(find(rep, "extremal.crossover")->value, 9.0);
  EXPECT_NEAR(find(rep, "extremal.slot9")->value, 1.311 - 0.995293, 1e-6);
  EXPECT_EQ(find(rep, "extremal.slot10"), nullptr);

  c.extremal_caps = {0.9};
  EXPECT_THROW(runner::solve_extremal(c), ConfigError);
}

}  // namespace
