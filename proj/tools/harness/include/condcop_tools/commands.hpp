#pragma once

// Implementations of the condcop subcommands. Invalid input raises
// std::invalid_argument; everything else that goes wrong raises another
// std::exception.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace condcop::tools {

struct MeasureOptions {
  std::string copula;
  std::string knots;
  int m = 512;
  int jobs = 1;
  std::vector<std::string> measures;  // empty: all
};

std::vector<std::string> measure_names();
nlohmann::json cmd_measure(const MeasureOptions& opt);

struct EstimateOptions {
  std::string input;
  std::string mode = "chatterjee";  // chatterjee | plugin-arch | plugin-ev
  std::uint64_t seed = 0;
  int m = 512;
  int jobs = 1;
  int table_points = 101;
};

nlohmann::json cmd_estimate(const EstimateOptions& opt);

struct SampleOptions {
  std::string copula;
  std::string knots;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

void cmd_sample(const SampleOptions& opt, std::ostream& out);

struct ConvergeOptions {
  std::string copula;
  std::string knots;
  double step = 1.0;  // theta_k = theta + step / k
  std::vector<int> ks{1, 2, 4, 8, 16, 32, 64};
  std::vector<std::string> metrics;  // empty: all metrics of the family
  int m = 512;
  int jobs = 1;
};

void cmd_converge(const ConvergeOptions& opt, std::ostream& out);

struct ApproximateOptions {
  std::string copula;
  std::string knots;
  std::vector<int> resolutions{8, 16, 32, 64, 128, 256};
  int points = 25;
  int y_grid = 2048;
  int m = 512;
  int jobs = 1;
  bool fixtures = false;  // add identity and typewriter rows
};

void cmd_approximate(const ApproximateOptions& opt, std::ostream& out);

// Writes `text` to `path`, or to `fallback` when path is empty or "-".
void write_output(const std::string& path, const std::string& text, std::ostream& fallback);

std::string format_double(double v);

}  // namespace condcop::tools
