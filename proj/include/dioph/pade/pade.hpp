#pragma once

#include <gmpxx.h>

#include <vector>

#include "dioph/contfrac/contfrac.hpp"
#include "dioph/numeric/real.hpp"

namespace dioph {
namespace pade {

// Rational-function contact pair for (1-x)^(1/3): A(x) - (1-x)^(1/3) B(x)
// vanishes to order >= 2r+1 at x = 0, normalised by B(0) = 1.  Coefficients
// ascending.
struct PadePair {
    unsigned r = 0;
    std::vector<mpq_class> b;  // hypergeometric closed form
    std::vector<mpq_class> a;  // truncation of B(x) (1-x)^(1/3)
};

// Closed-form coefficients b_{rj} = prod_{k<j} ((1/3-r+k)(-r+k))/((1+k)(-2r+k)),
// the polynomial F(1/3-r, -r; -2r; x); A by exact series truncation.
PadePair pade_coefficients(unsigned r);

// Independent construction of the same pair by solving the linear system
// that kills the series coefficients r+1..2r; used as a cross-check.
PadePair pade_coefficients_linalg(unsigned r);

// Taylor coefficients of (1-x)^(1/3) up to degree n, exact.
std::vector<mpq_class> cuberoot_series(unsigned n);

// The rational approximants (5/4) B_r(3/128) / A_r(3/128) to 2^(1/3) for
// r = 0..count-1, in lowest terms.
std::vector<mpq_class> approximants_to_cube_root2(unsigned count);

// Checks |alpha - p/q| > c / q^kappa for every convergent with q <= q_max
// (convergents are the worst cases).  Returns the verdict plus the witness
// convergent with the smallest slack log10(|alpha-p/q| q^kappa / c).
struct MeasureCheck {
    Truth holds = Truth::Unknown;
    cf::Convergent worst;
    mpq_class slack_log10_lower = 0;  // certified lower bound on the worst slack
    size_t convergents_checked = 0;
};

MeasureCheck verify_effective_measure(const Real& alpha, const mpq_class& c,
                                      const mpq_class& kappa, const mpz_class& q_max,
                                      mpfr_prec_t max_prec = 0);

}  // namespace pade
}  // namespace dioph
