#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condcop/registry.hpp"
#include "condcop_tools/commands.hpp"
#include "condcop_tools/study.hpp"

namespace {

constexpr int kValidationError = 2;
constexpr int kRuntimeError = 1;

std::string summary_path_for(const std::string& out) {
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  const std::string stem =
      dot != std::string::npos && (slash == std::string::npos || dot > slash) ? out.substr(0, dot)
                                                                              : out;
  return stem + ".summary.json";
}

std::string families_help() {
  std::string s = "copula family, NAME or NAME:PARAMS (";
  const auto names = condcop::family_names();
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace condcop::tools;

  CLI::App app{"condcop: Markov-kernel based copula dependence analysis"};
  app.require_subcommand(1);
  std::string out_path = "-";
  const std::string family_help = families_help();

  MeasureOptions measure;
  auto* m_cmd = app.add_subcommand("measure", "dependence measures and distances to Pi as JSON");
  m_cmd->add_option("--copula", measure.copula, family_help)->required();
  m_cmd->add_option("--knots", measure.knots, "x,a CSV of Pickands knots for pickands-pwl");
  m_cmd->add_option("--m", measure.m, "quadrature resolution")->capture_default_str();
  m_cmd->add_option("--jobs", measure.jobs, "worker threads")->capture_default_str();
  m_cmd->add_option("--measures", measure.measures, "subset of measures")->delimiter(',');
  m_cmd->add_option("--out", out_path, "output path, - for stdout");

  EstimateOptions estimate;
  auto* e_cmd = app.add_subcommand("estimate", "estimate r / zeta1 from an x,y sample CSV");
  e_cmd->add_option("input,--input", estimate.input, "sample CSV")->required();
  e_cmd->add_option("--mode", estimate.mode, "chatterjee, plugin-arch or plugin-ev")
      ->capture_default_str();
  e_cmd->add_option("--seed", estimate.seed, "seed for tie breaking")->capture_default_str();
  e_cmd->add_option("--m", estimate.m, "quadrature resolution")->capture_default_str();
  e_cmd->add_option("--jobs", estimate.jobs, "worker threads")->capture_default_str();
  e_cmd->add_option("--table-points", estimate.table_points, "rows of the fitted table")
      ->capture_default_str();
  e_cmd->add_option("--out", out_path, "output path, - for stdout");

  StudyConfig study;
  std::string summary_path;
  auto* s_cmd = app.add_subcommand("simulate", "seeded replication study of r estimators");
  s_cmd->add_option("--copula", study.copula, family_help)->required();
  s_cmd->add_option("--knots", study.knots, "x,a CSV of Pickands knots for pickands-pwl");
  s_cmd->add_option("--sizes", study.sizes, "sample sizes")->delimiter(',')->capture_default_str();
  s_cmd->add_option("--R", study.replications, "replications per cell")->capture_default_str();
  s_cmd->add_option("--estimators", study.estimators,
                    "chatterjee, plugin-arch, plugin-ev (default: by family)")
      ->delimiter(',');
  s_cmd->add_option("--seed", study.seed, "base seed")->capture_default_str();
  s_cmd->add_option("--jobs", study.jobs, "worker threads")->capture_default_str();
  s_cmd->add_option("--m", study.m, "quadrature resolution of plugin estimates")
      ->capture_default_str();
  s_cmd->add_flag("--timing", study.timing, "add a wall_time column");
  s_cmd->add_option("--out", out_path, "record CSV path, - for stdout");
  s_cmd->add_option("--summary", summary_path,
                    "summary JSON path (default: next to --out as NAME.summary.json)");

  SampleOptions sample;
  auto* sa_cmd = app.add_subcommand("sample", "draw an x,y sample");
  sa_cmd->add_option("--copula", sample.copula, family_help)->required();
  sa_cmd->add_option("--knots", sample.knots, "x,a CSV of Pickands knots for pickands-pwl");
  sa_cmd->add_option("--n", sample.n, "sample size")->capture_default_str();
  sa_cmd->add_option("--seed", sample.seed, "seed")->capture_default_str();
  sa_cmd->add_option("--stream", sample.stream, "independent stream index")->capture_default_str();
  sa_cmd->add_option("--out", out_path, "output path, - for stdout");

  ConvergeOptions converge;
  auto* c_cmd =
      app.add_subcommand("converge", "discrepancies along theta_k = theta + step / k as CSV");
  c_cmd->add_option("--copula", converge.copula, family_help)->required();
  c_cmd->add_option("--knots", converge.knots, "unused; accepted for symmetry");
  c_cmd->add_option("--step", converge.step, "parameter offset scale")->capture_default_str();
  c_cmd->add_option("--ks", converge.ks, "sequence indices")->delimiter(',')->capture_default_str();
  c_cmd->add_option("--metrics", converge.metrics, "subset of metric columns")->delimiter(',');
  c_cmd->add_option("--m", converge.m, "quadrature resolution")->capture_default_str();
  c_cmd->add_option("--jobs", converge.jobs, "worker threads")->capture_default_str();
  c_cmd->add_option("--out", out_path, "output path, - for stdout");

  ApproximateOptions approx;
  auto* a_cmd = app.add_subcommand("approximate", "checkerboard wcc profiles as CSV");
  a_cmd->add_option("--copula", approx.copula, family_help)->required();
  a_cmd->add_option("--knots", approx.knots, "x,a CSV of Pickands knots for pickands-pwl");
  a_cmd->add_option("--resolutions", approx.resolutions, "checkerboard resolutions")
      ->delimiter(',')
      ->capture_default_str();
  a_cmd->add_option("--points", approx.points, "number of x abscissae")->capture_default_str();
  a_cmd->add_option("--y-grid", approx.y_grid, "y grid of the Levy distance")
      ->capture_default_str();
  a_cmd->add_option("--m", approx.m, "quadrature resolution of D1")->capture_default_str();
  a_cmd->add_option("--jobs", approx.jobs, "worker threads")->capture_default_str();
  a_cmd->add_flag("--fixtures", approx.fixtures, "add identity and typewriter rows");
  a_cmd->add_option("--out", out_path, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kValidationError;
  }

  try {
    if (m_cmd->parsed()) {
      write_output(out_path, cmd_measure(measure).dump(2) + "\n", std::cout);
    } else if (e_cmd->parsed()) {
      write_output(out_path, cmd_estimate(estimate).dump(2) + "\n", std::cout);
    } else if (s_cmd->parsed()) {
      const StudyResult result = run_study(study);
      std::ostringstream csv;
      write_records_csv(csv, result);
      write_output(out_path, csv.str(), std::cout);
      if (summary_path.empty() && out_path != "-") summary_path = summary_path_for(out_path);
      if (!summary_path.empty()) {
        write_output(summary_path, summarize(result).dump(2) + "\n", std::cout);
      }
    } else if (sa_cmd->parsed()) {
      std::ostringstream csv;
      cmd_sample(sample, csv);
      write_output(out_path, csv.str(), std::cout);
    } else if (c_cmd->parsed()) {
      std::ostringstream csv;
      cmd_converge(converge, csv);
      write_output(out_path, csv.str(), std::cout);
    } else if (a_cmd->parsed()) {
      std::ostringstream csv;
      cmd_approximate(approx, csv);
      write_output(out_path, csv.str(), std::cout);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "condcop: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "condcop: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
