#pragma once

// Named copula families, written NAME or NAME:P1[,P2].
//
//   pi, m, w                     basic copulas
//   clayton:T gumbel:T frank:T   Archimedean (normalized generators)
//   w-gen                        Archimedean copula of phi(t) = 2(1 - t)
//   marshall-olkin:A,B
//   galambos:T gumbel-ev:T       Extreme-Value
//   pickands-pwl[:FILE]          Extreme-Value with piecewise-linear A read
//                                from a `x,a` CSV; without FILE the built-in
//                                example knots are used

#include <optional>
#include <string>
#include <vector>

#include "condcop/archimedean.hpp"
#include "condcop/copula.hpp"
#include "condcop/extreme_value.hpp"

namespace condcop {

struct FamilySpec {
  std::string name;
  std::vector<double> params;
  std::string argument;  // non-numeric argument (knots file)
};

// Throws std::invalid_argument on malformed specs or unknown names.
FamilySpec parse_family(const std::string& spec);

std::string format_family(const FamilySpec& spec);

// `knots_path` overrides the file of pickands-pwl.
Copula make_copula(const FamilySpec& spec, const std::string& knots_path = "");
Copula make_copula(const std::string& spec, const std::string& knots_path = "");

// Underlying generator / Pickands function when the family has one.
std::optional<Generator> family_generator(const FamilySpec& spec);
std::optional<PickandsFunction> family_pickands(const FamilySpec& spec,
                                                const std::string& knots_path = "");

std::vector<std::string> family_names();

// A representative parameter choice for every registered family.
std::vector<std::string> example_family_specs();

}  // namespace condcop
