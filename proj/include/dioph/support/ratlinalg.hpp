#pragma once

#include <gmpxx.h>

#include <vector>

namespace dioph {

using RatMatrix = std::vector<std::vector<mpq_class>>;
using RatVector = std::vector<mpq_class>;

// Solves A x = b exactly by Gaussian elimination with partial (first
// nonzero) pivoting.  Throws InvalidParameters when A is singular.
RatVector solve_linear(RatMatrix a, RatVector b);

// Kernel vector of a matrix with more columns than rows (returns one
// nonzero solution of A x = 0 with the last free variable set to 1).
RatVector kernel_vector(RatMatrix a, size_t cols);

}  // namespace dioph
