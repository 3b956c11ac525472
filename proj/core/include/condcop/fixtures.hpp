#pragma once

// Copula sequences with known convergence behaviour.

#include "condcop/archimedean.hpp"
#include "condcop/copula.hpp"

namespace condcop {

// Member (N, i), i = 1..2^N, of the sequence with index n = 2^N + i - 2 whose
// kernel is the point mass at 2^N x + 1 - i for x in [(i-1)/2^N, i/2^N] and
// uniform elsewhere. D1 to Pi equals 2^-N / 3.
Copula typewriter_copula(int big_n, int i);

struct TypewriterIndex {
  int big_n = 0;
  int i = 1;
};
TypewriterIndex typewriter_index(long long n);  // inverse of n = 2^N + i - 2

// Completely dependent copula of h(x) = 2^n x mod 1. The transposed kernel is
// the uniform distribution on {(x + i) / 2^n : i = 0..2^n - 1}.
Copula shift_copula(int n);

// Strict generator (2(1 - t) - log(t) / (k log 2)) / (1 + 1/k), converging to
// the W generator on (0, 1] but not at 0.
Generator make_w_limit_generator(double k);

}  // namespace condcop
