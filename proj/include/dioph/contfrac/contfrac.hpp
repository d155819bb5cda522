#pragma once

#include <gmpxx.h>

#include <vector>

#include "dioph/numeric/real.hpp"

namespace dioph {
namespace cf {

struct Convergent {
    mpz_class p;
    mpz_class q;
};

// Partial quotients a0; a1, a2, ... together with the convergent ladder
// p_i/q_i.  `terminated` is set when the input was rational and fully
// expanded (the last convergent equals the input).
struct ContinuedFraction {
    std::vector<mpz_class> quotients;
    std::vector<Convergent> convergents;
    bool terminated = false;
};

// Exact expansion of a rational (Euclid); stops after `count` quotients or
// at termination, whichever comes first.
ContinuedFraction expand(const mpq_class& x, size_t count);

// Expansion of a certified real.  Every emitted quotient is certified: a
// quotient is produced only when the enclosure pins its floor, with
// automatic precision escalation up to `max_prec`.  Exactly-rational recipes
// take the exact path.
ContinuedFraction expand(const Real& x, size_t count, mpfr_prec_t max_prec = 0);

// Best rational approximation in the Dirichlet sense: 1 <= q <= Q and
// |q*xi - p| <= 1/Q, taken from the convergent ladder.
Convergent dirichlet_approx(const Real& xi, const mpz_class& Q, mpfr_prec_t max_prec = 0);

// All convergents with q <= 10^q_max_log10 (all of them for rational xi).
std::vector<Convergent> convergents_up_to(const Real& xi, unsigned q_max_log10,
                                          mpfr_prec_t max_prec = 0);

// Convergents while `keep(q)` holds; generic driver used by the solvers.
std::vector<Convergent> convergents_while(const Real& xi, const mpz_class& q_limit,
                                          mpfr_prec_t max_prec = 0);

}  // namespace cf
}  // namespace dioph
