#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zdcert/config.hpp"
#include "zdcert/error.hpp"
#include "zdcert/report.hpp"
#include "zdcert/runner.hpp"

namespace {

using zdcert::config::RunConfig;
using zdcert::runner::kExitConfig;
using zdcert::runner::kExitFailure;

int write_report(const zdcert::report::Report& rep, const RunConfig& c) {
  std::ofstream file;
  if (!c.output_path.empty()) {
    file.open(c.output_path);
    if (!file) {
      std::cerr << "zdcert: cannot write '" << c.output_path << "'\n";
      return kExitFailure;
    }
  }
  std::ostream& os = c.output_path.empty() ? std::cout : file;
  if (c.output_format == "records") {
    zdcert::report::emit_records(rep, os);
  } else {
    zdcert::report::emit_table(rep, os);
  }
  os.flush();
  if (!os) {
    std::cerr << "zdcert: write failed\n";
    return kExitFailure;
  }
  return zdcert::runner::exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certification of a zero-density case analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"table", "records"}));

  auto* cond2 = app.add_subcommand("verify-cond2", "certify Condition 2 on the default grid regions");
  std::optional<double> step_a, step_b, step_t, margin;
  std::string region = "all";
  cond2->add_option("--step-a", step_a, "lattice step in a");
  cond2->add_option("--step-b", step_b, "lattice step in b");
  cond2->add_option("--step-t", step_t, "lattice step in t");
  cond2->add_option("--margin", margin, "required nontrivial slack");
  cond2->add_option("--region", region, "region to check")->check(CLI::IsMember({"1", "2", "3", "1w", "all"}));

  auto* table = app.add_subcommand("density-table", "weighted-sum constants, Case 1 context, zero schedule");

  auto* extremal = app.add_subcommand("extremal", "budget-constrained extremal problem");
  extremal->require_subcommand(1);
  extremal->fallthrough();
  auto* solve = extremal->add_subcommand("solve", "solve the problem given by the extremal.* config keys");
  solve->fallthrough();

  auto* cases = app.add_subcommand("case-analysis", "a/b split, combination, Cases 7 and 8, verdict");
  std::string case_sel = "all";
  bool sensitivity = false;
  cases->add_option("--case", case_sel, "a-sum case 1..8 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "8", "all"}));
  cases->add_flag("--sensitivity", sensitivity, "also recombine Cases 1-6 with an inflated typical b bound");

  auto* repro = app.add_subcommand("reproduce-paper", "run every task");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    RunConfig c = config_path.empty() ? RunConfig{} : zdcert::config::load(config_path);
    if (!out_path.empty()) c.output_path = out_path;
    if (!format.empty()) c.output_format = format;

    if (*cond2) {
      c.tasks = {"cond2"};
      if (step_a) c.cond2_step_a = *step_a;
      if (step_b) c.cond2_step_b = *step_b;
      if (step_t) c.cond2_step_t = *step_t;
      if (margin) c.cond2_margin = *margin;
      if (region == "all") {
        c.cond2_regions = {"1", "2", "3"};
      } else {
        c.cond2_regions = {region};
      }
    } else if (*table) {
      c.tasks = {"density-table"};
    } else if (*solve) {
      zdcert::config::validate(c);
      return write_report(zdcert::runner::solve_extremal(c), c);
    } else if (*cases) {
      c.tasks = {"case-analysis"};
      if (sensitivity) c.cases_sensitivity = true;
    } else if (*repro) {
      c.tasks.assign(std::begin(zdcert::config::kTaskNames), std::end(zdcert::config::kTaskNames));
    }
    zdcert::config::validate(c);
    auto rep = zdcert::runner::run(c);
    if (*cases && case_sel != "all") zdcert::runner::filter_case(rep, std::stoi(case_sel));
    return write_report(rep, c);
  } catch (const zdcert::ConfigError& e) {
    std::cerr << "zdcert: " << e.what() << '\n';
    return kExitConfig;
  } catch (const zdcert::InvalidParams& e) {
    std::cerr << "zdcert: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "zdcert: " << e.what() << '\n';
    return kExitFailure;
  }
}
