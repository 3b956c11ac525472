#include "condcop_tools/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "condcop/checkerboard.hpp"
#include "condcop/convergence.hpp"
#include "condcop/estimation.hpp"
#include "condcop/fixtures.hpp"
#include "condcop/metrics.hpp"
#include "condcop/registry.hpp"
#include "condcop/sampling.hpp"

namespace condcop::tools {

namespace {

Quadrature quadrature(int m, int jobs) {
  Quadrature q{m, jobs};
  validate(q);
  return q;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void check_subset(const std::vector<std::string>& requested,
                  const std::vector<std::string>& known, const char* what) {
  for (const auto& r : requested) {
    if (!contains(known, r)) {
      throw std::invalid_argument(std::string("unknown ") + what + " '" + r + "'");
    }
  }
}

std::vector<double> table_grid(int points) {
  if (points < 2) throw std::invalid_argument("estimate: table needs at least 2 points");
  std::vector<double> t(points);
  for (int k = 0; k < points; ++k) t[k] = static_cast<double>(k) / (points - 1);
  return t;
}

bool is_archimedean_family(const std::string& name) {
  return name == "clayton" || name == "gumbel" || name == "frank";
}

bool is_ev_family(const std::string& name) {
  return name == "galambos" || name == "gumbel-ev";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<std::string> measure_names() {
  return {"zeta1", "r", "r_via_d2", "d1_to_pi", "d2_squared_to_pi", "d_infty_to_pi",
          "d_inf_to_pi"};
}

nlohmann::json cmd_measure(const MeasureOptions& opt) {
  const Quadrature q = quadrature(opt.m, opt.jobs);
  check_subset(opt.measures, measure_names(), "measure");
  const Copula c = make_copula(opt.copula, opt.knots);
  auto wanted = [&](const char* name) {
    return opt.measures.empty() || contains(opt.measures, name);
  };

  nlohmann::json out;
  out["copula"] = opt.copula;
  out["m"] = opt.m;
  nlohmann::json values = nlohmann::json::object();
  if (wanted("zeta1") || wanted("r") || wanted("r_via_d2")) {
    const DependenceMeasures dm = dependence_measures(c, q);
    if (wanted("zeta1")) values["zeta1"] = dm.zeta1;
    if (wanted("r")) values["r"] = dm.r;
    if (wanted("r_via_d2")) values["r_via_d2"] = dm.r_via_d2;
  }
  if (wanted("d1_to_pi") || wanted("d2_squared_to_pi") || wanted("d_infty_to_pi")) {
    const KernelDistances kd = kernel_distances(c, make_pi(), q);
    if (wanted("d1_to_pi")) values["d1_to_pi"] = kd.d1;
    if (wanted("d2_squared_to_pi")) values["d2_squared_to_pi"] = kd.d2_squared;
    if (wanted("d_infty_to_pi")) values["d_infty_to_pi"] = kd.d_infty;
  }
  if (wanted("d_inf_to_pi")) {
    values["d_inf_to_pi"] = d_inf(c, make_pi(), q);
    out["d_inf_error_bound"] = d_inf_error_bound(q);
  }
  out["measures"] = values;
  return out;
}

nlohmann::json cmd_estimate(const EstimateOptions& opt) {
  static const std::vector<std::string> modes{"chatterjee", "plugin-arch", "plugin-ev"};
  if (!contains(modes, opt.mode)) {
    throw std::invalid_argument("estimate: unknown mode '" + opt.mode + "'");
  }
  const Quadrature q = quadrature(opt.m, opt.jobs);
  const std::vector<double> grid = table_grid(opt.table_points);
  const SampleSet s = read_sample_csv(opt.input);
  validate(s, 10);

  nlohmann::json out;
  out["mode"] = opt.mode;
  out["n"] = s.size();
  out["seed"] = opt.seed;
  if (opt.mode == "chatterjee") {
    out["r"] = chatterjee_r(s, opt.seed);
    return out;
  }

  const PseudoObservations p = pseudo_obs(s);
  out["m"] = opt.m;
  nlohmann::json table = nlohmann::json::array();
  Copula fitted = make_pi();
  if (opt.mode == "plugin-arch") {
    const EmpiricalKendall k = empirical_kendall(p);
    const Generator g = reconstruct_generator(k);
    for (double t : grid) {
      table.push_back({{"t", t}, {"kendall", k(t)}, {"phi", t > 0.0 ? g.phi(t) : g.phi_at_zero()}});
    }
    out["strict"] = g.strict();
    out["kendall_table"] = table;
    fitted = archimedean_copula(g);
  } else {
    const RawPickands raw = cfg_estimator(p);
    const PickandsFunction a = convexify_pickands(raw);
    for (double t : grid) table.push_back({{"t", t}, {"a", a.a(t)}});
    out["pickands_table"] = table;
    fitted = ev_copula(a);
  }
  const DependenceMeasures dm = dependence_measures(fitted, q);
  out["zeta1"] = dm.zeta1;
  out["r"] = dm.r;
  return out;
}

void cmd_sample(const SampleOptions& opt, std::ostream& out) {
  if (opt.n < 1) throw std::invalid_argument("sample: n must be >= 1");
  const Copula c = make_copula(opt.copula, opt.knots);
  write_sample_csv(out, sample(c, opt.n, RngSpec{opt.seed, opt.stream}));
}

void cmd_converge(const ConvergeOptions& opt, std::ostream& out) {
  const Quadrature q = quadrature(opt.m, opt.jobs);
  if (opt.ks.empty()) throw std::invalid_argument("converge: no indices");
  for (int k : opt.ks) {
    if (k < 1) throw std::invalid_argument("converge: indices must be >= 1");
  }
  if (!std::isfinite(opt.step) || opt.step == 0.0) {
    throw std::invalid_argument("converge: step must be finite and nonzero");
  }
  const FamilySpec base = parse_family(opt.copula);
  if (base.params.empty()) {
    throw std::invalid_argument("converge: family '" + base.name + "' has no parameter");
  }

  ConvergenceGrid grid;
  grid.quadrature = q;
  auto member = [&](int k) {
    FamilySpec s = base;
    s.params[0] += opt.step / k;
    return s;
  };
  auto discrepancies = [&](int k) {
    const FamilySpec sk = member(k);
    if (is_archimedean_family(base.name)) {
      return archimedean_discrepancies(*family_generator(sk), *family_generator(base), grid);
    }
    if (is_ev_family(base.name)) {
      return ev_discrepancies(*family_pickands(sk), *family_pickands(base), grid);
    }
    return copula_discrepancies(make_copula(sk), make_copula(base), grid);
  };

  std::vector<std::vector<Discrepancy>> rows;
  for (int k : opt.ks) rows.push_back(discrepancies(k));
  std::vector<std::string> names;
  for (const auto& d : rows.front()) names.push_back(d.name);
  check_subset(opt.metrics, names, "metric");

  std::ostringstream os;
  os << "k,theta";
  for (const auto& n : names) {
    if (opt.metrics.empty() || contains(opt.metrics, n)) os << "," << n;
  }
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << opt.ks[r] << "," << format_double(member(opt.ks[r]).params[0]);
    for (const auto& d : rows[r]) {
      if (opt.metrics.empty() || contains(opt.metrics, d.name)) os << "," << format_double(d.value);
    }
    os << "\n";
  }
  out << os.str();
}

void cmd_approximate(const ApproximateOptions& opt, std::ostream& out) {
  const Quadrature q = quadrature(opt.m, opt.jobs);
  if (opt.resolutions.empty()) throw std::invalid_argument("approximate: no resolutions");
  for (int n : opt.resolutions) {
    if (n < 1) throw std::invalid_argument("approximate: resolutions must be >= 1");
  }
  if (opt.points < 1) throw std::invalid_argument("approximate: points must be >= 1");
  if (opt.y_grid < 2) throw std::invalid_argument("approximate: y grid must be >= 2");

  const Copula c = make_copula(opt.copula, opt.knots);
  const std::vector<double> xs = golden_abscissae(opt.points);
  std::ostringstream os;
  os << "row,index,wcc_max,wcc_mean,wcc_q95,d1\n";
  auto emit = [&](const char* row, long long index, const Copula& approx, const Copula& target) {
    const WccProfile p = wcc_profile(approx, target, xs, opt.y_grid);
    os << row << "," << index << "," << format_double(p.max) << "," << format_double(p.mean)
       << "," << format_double(p.q95) << "," << format_double(d1(approx, target, q)) << "\n";
  };
  if (opt.fixtures) emit("identity", 0, c, c);
  for (int n : opt.resolutions) {
    emit("checkerboard", n,
         checkerboard_copula(checkerboard_approx(c, static_cast<std::size_t>(n))), c);
  }
  if (opt.fixtures) {
    const Copula pi = make_pi();
    for (long long n = 0; n < 30; ++n) {
      const TypewriterIndex t = typewriter_index(n);
      emit("typewriter", n, typewriter_copula(t.big_n, t.i), pi);
    }
  }
  out << os.str();
}

}  // namespace condcop::tools
