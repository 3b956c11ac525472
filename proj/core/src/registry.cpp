#include "condcop/registry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace condcop {

namespace {

struct Arity {
  const char* name;
  std::size_t params;
  bool file_argument;
};

constexpr Arity kFamilies[] = {
    {"pi", 0, false},        {"m", 0, false},           {"w", 0, false},
    {"w-gen", 0, false},     {"clayton", 1, false},     {"gumbel", 1, false},
    {"frank", 1, false},     {"marshall-olkin", 2, false}, {"galambos", 1, false},
    {"gumbel-ev", 1, false}, {"pickands-pwl", 0, true},
};

const Arity* find_family(const std::string& name) {
  for (const auto& f : kFamilies) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

double parse_number(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("family '" + spec + "': bad parameter '" + s + "'");
  }
  return v;
}

}  // namespace

FamilySpec parse_family(const std::string& spec) {
  FamilySpec out;
  const auto colon = spec.find(':');
  out.name = spec.substr(0, colon);
  const Arity* fam = find_family(out.name);
  if (fam == nullptr) throw std::invalid_argument("unknown copula family '" + out.name + "'");
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (fam->file_argument) {
    out.argument = rest;
    return out;
  }
  if (!rest.empty()) {
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) out.params.push_back(parse_number(item, spec));
  }
  if (out.params.size() != fam->params) {
    throw std::invalid_argument("family '" + out.name + "' expects " +
                                std::to_string(fam->params) + " parameter(s)");
  }
  return out;
}

std::string format_family(const FamilySpec& spec) {
  std::ostringstream os;
  os << spec.name;
  if (!spec.argument.empty()) os << ":" << spec.argument;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    os << (i == 0 ? ":" : ",") << spec.params[i];
  }
  return os.str();
}

std::optional<Generator> family_generator(const FamilySpec& spec) {
  if (spec.name == "clayton") return make_clayton(spec.params.at(0));
  if (spec.name == "gumbel") return make_gumbel(spec.params.at(0));
  if (spec.name == "frank") return make_frank(spec.params.at(0));
  if (spec.name == "w-gen") return make_w_generator();
  return std::nullopt;
}

std::optional<PickandsFunction> family_pickands(const FamilySpec& spec,
                                                const std::string& knots_path) {
  if (spec.name == "galambos") return make_galambos(spec.params.at(0));
  if (spec.name == "gumbel-ev") return make_gumbel_pickands(spec.params.at(0));
  if (spec.name == "pickands-pwl") {
    const std::string path = knots_path.empty() ? spec.argument : knots_path;
    if (path.empty()) return make_piecewise_linear_pickands(example_pickands_knots());
    return make_piecewise_linear_pickands(read_knots_csv(path), "pickands-pwl:" + path);
  }
  return std::nullopt;
}

Copula make_copula(const FamilySpec& spec, const std::string& knots_path) {
  if (spec.name == "pi") return make_pi();
  if (spec.name == "m") return make_m();
  if (spec.name == "w") return make_w();
  if (spec.name == "marshall-olkin") {
    return make_marshall_olkin({spec.params.at(0), spec.params.at(1)});
  }
  if (auto g = family_generator(spec)) return archimedean_copula(*g);
  if (auto a = family_pickands(spec, knots_path)) return ev_copula(*a);
  throw std::invalid_argument("unknown copula family '" + spec.name + "'");
}

Copula make_copula(const std::string& spec, const std::string& knots_path) {
  return make_copula(parse_family(spec), knots_path);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) out.emplace_back(f.name);
  return out;
}

std::vector<std::string> example_family_specs() {
  return {"pi",          "m",           "w",
          "w-gen",       "clayton:2",   "gumbel:3",
          "frank:5",     "frank:-4",    "marshall-olkin:0.3,0.6",
          "galambos:3",  "gumbel-ev:2", "pickands-pwl"};
}

}  // namespace condcop
