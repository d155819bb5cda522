#include "dioph/solvers/mordell.hpp"

#include <algorithm>

#include "dioph/errors.hpp"
#include "dioph/support/parallel.hpp"

namespace dioph {
namespace solvers {

MordellSolutionSet solve_mordell(const mpz_class& k, const mpz_class& x_search_bound,
                                 unsigned parallelism) {
    if (k == 0) throw InvalidParameters("solve_mordell: k must be nonzero");
    if (x_search_bound < 1) throw InvalidParameters("solve_mordell: search bound must be >= 1");
    if (!x_search_bound.fits_slong_p()) {
        throw InvalidParameters("solve_mordell: search bound too large to enumerate");
    }
    if (parallelism == 0) parallelism = default_parallelism();

    long bound = mpz_get_si(x_search_bound.get_mpz_t());
    using Pair = std::pair<mpz_class, mpz_class>;
    auto found = parallel_chunks<Pair>(
        -bound, bound + 1, parallelism, [&](long long lo, long long hi, std::vector<Pair>& out) {
            mpz_class t;
            for (long long x = lo; x < hi; ++x) {
                t = mpz_class(static_cast<long>(x));
                t = t * t * t + k;
                if (t < 0) continue;
                if (mpz_perfect_square_p(t.get_mpz_t())) {
                    mpz_class y = sqrt(t);
                    out.emplace_back(mpz_class(static_cast<long>(x)), y);
                    if (y != 0) out.emplace_back(mpz_class(static_cast<long>(x)), mpz_class(-y));
                }
            }
        });

    MordellSolutionSet res;
    res.k = k;
    res.search_bound = x_search_bound;
    res.solutions = std::move(found);
    std::sort(res.solutions.begin(), res.solutions.end());
    res.complete = false;
    res.proven_bound = logforms::bound_mordell(k);
    return res;
}

}  // namespace solvers
}  // namespace dioph
