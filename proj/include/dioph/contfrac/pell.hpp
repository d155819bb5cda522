#pragma once

#include <gmpxx.h>

namespace dioph {
namespace cf {

// Fundamental solution of x^2 - d*y^2 = 1 (least x > 1).
struct PellSolution {
    mpz_class x;
    mpz_class y;
    mpz_class d;
    bool fundamental = true;
};

// Solves the Pell equation from the continued fraction of sqrt(d), using the
// exact (P,Q) recurrence throughout.  Throws NotApplicable for square d and
// InvalidParameters for d < 2.
PellSolution solve_pell(const mpz_class& d);

}  // namespace cf
}  // namespace dioph
