#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace condcop {

// Paired observations (x_i, y_i).
struct SampleSet {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
};

// Throws std::invalid_argument unless n >= min_size, both columns have equal
// length and no value is NaN.
void validate(const SampleSet& s, std::size_t min_size = 2);

// CSV with header `x,y`; values are written with 17 significant digits.
SampleSet read_sample_csv(const std::string& path);
SampleSet read_sample_csv(std::istream& in);
void write_sample_csv(std::ostream& out, const SampleSet& s);

}  // namespace condcop
