#include "condcop/sample_set.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace condcop {

void validate(const SampleSet& s, std::size_t min_size) {
  if (s.x.size() != s.y.size()) {
    throw std::invalid_argument("sample: x and y columns differ in length");
  }
  if (s.size() < min_size) {
    throw std::invalid_argument("sample: need at least " + std::to_string(min_size) +
                                " observations");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isnan(s.x[i]) || std::isnan(s.y[i])) {
      throw std::invalid_argument("sample: NaN in row " + std::to_string(i + 1));
    }
  }
}

namespace {

double parse_field(const std::string& field, std::size_t lineno) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw std::invalid_argument("sample CSV line " + std::to_string(lineno) +
                                ": not a number: '" + field + "'");
  }
  return v;
}

}  // namespace

SampleSet read_sample_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("sample CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y") throw std::invalid_argument("sample CSV must start with header 'x,y'");
  SampleSet s;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw std::invalid_argument("sample CSV line " + std::to_string(lineno) +
                                  ": expected two columns");
    }
    s.x.push_back(parse_field(line.substr(0, comma), lineno));
    s.y.push_back(parse_field(line.substr(comma + 1), lineno));
  }
  return s;
}

SampleSet read_sample_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sample file: " + path);
  return read_sample_csv(in);
}

void write_sample_csv(std::ostream& out, const SampleSet& s) {
  out << "x,y\n";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.x[i], s.y[i]);
    out << buf;
  }
}

}  // namespace condcop
