#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "dioph/logforms/logforms.hpp"

namespace dioph {
namespace solvers {

// Solutions of y^2 = x^3 + k found by exhaustive search over |x| <=
// search_bound.  `complete` stays false: the proven bound (reported
// alongside) is astronomically beyond any search.
struct MordellSolutionSet {
    mpz_class k;
    std::vector<std::pair<mpz_class, mpz_class>> solutions;  // (x, y), y >= 0 first
    mpz_class search_bound;
    bool complete = false;
    logforms::BoundResult proven_bound;
};

MordellSolutionSet solve_mordell(const mpz_class& k, const mpz_class& x_search_bound,
                                 unsigned parallelism = 0);

}  // namespace solvers
}  // namespace dioph
