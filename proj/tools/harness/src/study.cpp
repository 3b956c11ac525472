#include "condcop_tools/study.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "condcop/estimation.hpp"
#include "condcop/metrics.hpp"
#include "condcop/registry.hpp"
#include "condcop/sampling.hpp"

namespace condcop::tools {

namespace {

const char* const kEstimators[] = {"chatterjee", "plugin-arch", "plugin-ev"};

bool is_archimedean(const std::string& name) {
  return name == "clayton" || name == "gumbel" || name == "frank" || name == "w-gen";
}

bool is_extreme_value(const std::string& name) {
  return name == "galambos" || name == "gumbel-ev" || name == "pickands-pwl";
}

}  // namespace

std::vector<std::string> default_estimators(const std::string& copula) {
  const std::string name = parse_family(copula).name;
  if (is_archimedean(name)) return {"chatterjee", "plugin-arch"};
  if (is_extreme_value(name)) return {"chatterjee", "plugin-ev"};
  return {"chatterjee", "plugin-arch", "plugin-ev"};
}

void validate(const StudyConfig& cfg) {
  parse_family(cfg.copula);
  if (cfg.replications < 1) throw std::invalid_argument("simulate: R must be >= 1");
  if (cfg.sizes.empty()) throw std::invalid_argument("simulate: no sample sizes");
  for (std::size_t n : cfg.sizes) {
    if (n < 10) throw std::invalid_argument("simulate: sample sizes must be >= 10");
  }
  if (cfg.estimators.empty()) throw std::invalid_argument("simulate: no estimators");
  for (const auto& e : cfg.estimators) {
    if (std::find(std::begin(kEstimators), std::end(kEstimators), e) == std::end(kEstimators)) {
      throw std::invalid_argument("simulate: unknown estimator '" + e + "'");
    }
  }
  if (cfg.jobs < 1) throw std::invalid_argument("simulate: jobs must be >= 1");
  validate(Quadrature{cfg.m, 1});
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t replication_seed(std::uint64_t base, const std::string& estimator,
                               std::size_t n, int replication) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ fnv1a(estimator));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  h = splitmix64(h ^ static_cast<std::uint64_t>(replication));
  return h;
}

StudyResult run_study(const StudyConfig& cfg_in) {
  StudyConfig cfg = cfg_in;
  if (cfg.estimators.empty()) cfg.estimators = default_estimators(cfg.copula);
  validate(cfg);
  std::sort(cfg.estimators.begin(), cfg.estimators.end());
  cfg.estimators.erase(std::unique(cfg.estimators.begin(), cfg.estimators.end()),
                       cfg.estimators.end());
  std::sort(cfg.sizes.begin(), cfg.sizes.end());
  cfg.sizes.erase(std::unique(cfg.sizes.begin(), cfg.sizes.end()), cfg.sizes.end());

  const Copula copula = make_copula(cfg.copula, cfg.knots);
  StudyResult result;
  result.config = cfg;
  result.true_r = r_measure(copula, Quadrature{std::max(cfg.m, 512), cfg.jobs});

  for (const auto& e : cfg.estimators) {
    for (std::size_t n : cfg.sizes) {
      for (int rep = 0; rep < cfg.replications; ++rep) {
        StudyRecord r;
        r.estimator = e;
        r.n = n;
        r.replication = rep;
        r.seed = replication_seed(cfg.seed, e, n, rep);
        result.records.push_back(r);
      }
    }
  }

  const Quadrature q{cfg.m, 1};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= result.records.size() || failed.load()) return;
      StudyRecord& r = result.records[k];
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const SampleSet s =
            sample(copula, r.n, RngSpec{r.seed, static_cast<std::uint64_t>(r.replication)});
        if (r.estimator == "chatterjee") {
          r.value = chatterjee_r(s, r.seed);
        } else {
          const Structure which = r.estimator == "plugin-arch" ? Structure::archimedean
                                                               : Structure::extreme_value;
          r.value = plugin_zeta1_r(pseudo_obs(s), which, q).r;
        }
        if (!std::isfinite(r.value)) {
          throw std::runtime_error("simulate: non-finite estimate for " + r.estimator);
        }
        r.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (cfg.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

void write_records_csv(std::ostream& out, const StudyResult& result) {
  const bool timing = result.config.timing;
  out << "estimator,n,replication,seed,value" << (timing ? ",wall_time" : "") << "\n";
  char buf[128];
  for (const auto& r : result.records) {
    std::snprintf(buf, sizeof buf, "%s,%zu,%d,%llu,%.17g", r.estimator.c_str(), r.n,
                  r.replication, static_cast<unsigned long long>(r.seed), r.value);
    out << buf;
    if (timing) {
      std::snprintf(buf, sizeof buf, ",%.6f", r.wall_time);
      out << buf;
    }
    out << "\n";
  }
}

nlohmann::json summarize(const StudyResult& result) {
  std::map<std::pair<std::string, std::size_t>, std::vector<double>> cells;
  for (const auto& r : result.records) cells[{r.estimator, r.n}].push_back(r.value);
  nlohmann::json out;
  out["copula"] = result.config.copula;
  out["replications"] = result.config.replications;
  out["seed"] = result.config.seed;
  out["m"] = result.config.m;
  out["true_r"] = result.true_r;
  out["sizes"] = result.config.sizes;
  out["estimators"] = result.config.estimators;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, values] : cells) {
    double sum = 0.0;
    double sq = 0.0;
    for (double v : values) {
      sum += v;
      sq += (v - result.true_r) * (v - result.true_r);
    }
    const double count = static_cast<double>(values.size());
    nlohmann::json row;
    row["estimator"] = key.first;
    row["n"] = key.second;
    row["count"] = values.size();
    row["mean"] = sum / count;
    row["rmse"] = std::sqrt(sq / count);
    row["min"] = *std::min_element(values.begin(), values.end());
    row["q1"] = quantile(values, 0.25);
    row["median"] = quantile(values, 0.5);
    row["q3"] = quantile(values, 0.75);
    row["max"] = *std::max_element(values.begin(), values.end());
    rows.push_back(row);
  }
  out["cells"] = rows;
  return out;
}

}  // namespace condcop::tools
