#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace dioph {
namespace solvers {

// Complete solution set of x^3 - 2y^3 = m.  Completeness argument: below the
// cutoff |y| <= y0 every y is tried; above it any solution forces x/y (in
// lowest terms, up to a cube divisor of m) to be a convergent of 2^(1/3),
// and all convergents below the proven solution bound are tested exactly.
struct ThueSolutionSet {
    mpz_class m;
    std::vector<std::pair<mpz_class, mpz_class>> solutions;
    std::string method;  // "bruteforce" or "convergent-certified"
    mpz_class brute_cutoff;       // y0
    mpq_class bound_log10;        // log10 of the proven |x|,|y| bound
    size_t convergents_tested = 0;
};

ThueSolutionSet solve_thue_cubic(const mpz_class& m);

// Brute force alone over |y| <= y_bound (testing x^3 = m + 2 y^3); used as
// the second route in dual-method agreement checks.
std::vector<std::pair<mpz_class, mpz_class>> thue_brute_force(const mpz_class& m,
                                                              const mpz_class& y_bound);

}  // namespace solvers
}  // namespace dioph
