#include "dioph/contfrac/pell.hpp"

#include "dioph/errors.hpp"

namespace dioph {
namespace cf {

PellSolution solve_pell(const mpz_class& d) {
    if (d < 2) throw InvalidParameters("solve_pell: d must be >= 2");
    mpz_class a0 = sqrt(d);
    if (a0 * a0 == d) throw NotApplicable("solve_pell: d is a perfect square");

    // sqrt(d) = [a0; a1, a2, ...] via P_{k+1} = a_k Q_k - P_k,
    // Q_{k+1} = (d - P_{k+1}^2)/Q_k, a_k = floor((a0 + P_k)/Q_k).
    mpz_class P = 0, Q = 1, a = a0;
    mpz_class p_prev = 1, p_cur = a0;  // p_{-1}, p_0
    mpz_class q_prev = 0, q_cur = 1;   // q_{-1}, q_0
    for (;;) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        if (Q == 1) {
            // Period ends after this step; the convergent before it gives
            // x^2 - d y^2 = (-1)^period.
            mpz_class x = p_cur, y = q_cur;
            if (x * x - d * y * y == 1) return {x, y, d, true};
            // odd period: square x + y*sqrt(d)
            return {x * x + d * y * y, 2 * x * y, d, true};
        }
        mpz_class p_next = a * p_cur + p_prev;
        mpz_class q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
}

}  // namespace cf
}  // namespace dioph
