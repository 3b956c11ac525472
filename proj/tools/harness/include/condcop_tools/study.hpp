#pragma once

// Seeded Monte-Carlo replication studies comparing r estimators.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace condcop::tools {

struct StudyConfig {
  std::string copula;
  std::string knots;
  std::vector<std::size_t> sizes{50, 100, 500, 2000};
  int replications = 500;
  std::vector<std::string> estimators;  // chatterjee, plugin-arch, plugin-ev
  std::uint64_t seed = 1;
  int jobs = 1;
  int m = 256;          // quadrature for plugin estimates and the true value
  bool timing = false;  // record wall time per replication
};

// Throws std::invalid_argument on an invalid configuration.
void validate(const StudyConfig& cfg);

// Estimators used when the config lists none: chatterjee plus the plugin
// matching the family's structure (both plugins for other families).
std::vector<std::string> default_estimators(const std::string& copula);

struct StudyRecord {
  std::string estimator;
  std::size_t n = 0;
  int replication = 0;
  double value = 0.0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

struct StudyResult {
  StudyConfig config;
  double true_r = 0.0;
  std::vector<StudyRecord> records;  // sorted by estimator, n, replication
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(const std::string& s);
std::uint64_t replication_seed(std::uint64_t base, const std::string& estimator,
                               std::size_t n, int replication);

StudyResult run_study(const StudyConfig& cfg);

void write_records_csv(std::ostream& out, const StudyResult& result);

// Per (estimator, n): count, mean, min, q1, median, q3, max, rmse vs true r.
nlohmann::json summarize(const StudyResult& result);

}  // namespace condcop::tools
