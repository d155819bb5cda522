#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dioph/logforms/logforms.hpp"
#include "dioph/reduction/reduction.hpp"

namespace dioph {
namespace solvers {

// End-to-end certified treatment of the question: does {1, 3, 8, 120}
// extend to {1, 3, 8, 120, N}?  Any N has N = x^2 - 1 with
//   y^2 - 3x^2 = -2   =>   y + x*sqrt(3) = (1+sqrt(3))(2+sqrt(3))^r
//   z^2 - 8x^2 = -7   =>   z + x*sqrt(8) = (+-1+sqrt(8))(3+sqrt(8))^s
// (both sign families of the second equation are carried).  A common x
// makes r*theta - s + phi_j tiny; an explicit four-logarithm bound caps r,
// the reduction engine collapses it, and the survivors are enumerated.
struct QuadrupleReport {
    struct EqyEntry {
        long r;
        mpz_class x, y;
    };
    struct EqzEntry {
        long s;
        mpz_class x, z;
        int family;  // 1 or 2
    };
    std::vector<EqyEntry> eqy;
    std::vector<EqzEntry> eqz;

    struct LinearForm {
        std::string alpha1, alpha2, alpha3;  // expression strings
        mpz_class height1, height2, height3;  // exact heights of the alphas
        std::string coefficients;             // "b1=r, b2=-s, b3=-1"
        mpq_class mult;                       // A in |r theta - s + phi| < A C^-r
        mpq_class base;                       // C
        long valid_from_r;                    // inequality holds for r >= this
    };
    LinearForm form_family1, form_family2;

    logforms::BoundResult initial_bound;
    mpq_class initial_bound_log10;  // integer digits of the bound on r
    reduction::FixpointResult reduction_family1, reduction_family2;
    mpz_class final_bound;  // max of the two families

    // Exhaustive check below the final bound.
    struct Match {
        long r;
        mpz_class x;
        mpz_class n;  // x^2 - 1
        int family;
        long s;
    };
    std::vector<Match> matches;
    bool no_fifth_element = false;

    reduction::ReductionProblem problem_family1, problem_family2;
};

QuadrupleReport solve_quadruple(mpfr_prec_t max_prec = 0);

// Exact integer sequences behind the two Pell-type equations; exposed for
// tests (x_{r+1} = 4x_r - x_{r-1} for the first, 6x_s - x_{s-1} for both
// families of the second).
std::vector<QuadrupleReport::EqyEntry> eqy_sequence(size_t count);
std::vector<QuadrupleReport::EqzEntry> eqz_sequence(size_t count, int family);

}  // namespace solvers
}  // namespace dioph
