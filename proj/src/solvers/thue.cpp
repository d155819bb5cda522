#include "dioph/solvers/thue.hpp"

#include <algorithm>
#include <set>

#include "dioph/contfrac/contfrac.hpp"
#include "dioph/errors.hpp"
#include "dioph/logforms/logforms.hpp"

namespace dioph {
namespace solvers {

namespace {

bool exact_cube_root(const mpz_class& t, mpz_class& root_out) {
    if (t == 0) {
        root_out = 0;
        return true;
    }
    int exact = mpz_root(root_out.get_mpz_t(), t.get_mpz_t(), 3);
    return exact != 0;
}

// All g >= 1 with g^3 | m.
std::vector<mpz_class> cube_divisors(const mpz_class& m) {
    std::vector<mpz_class> out{1};
    mpz_class am = ::abs(m);
    for (mpz_class g = 2; g * g * g <= am; ++g) {
        if (mpz_divisible_p(am.get_mpz_t(), mpz_class(g * g * g).get_mpz_t())) {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<mpz_class, mpz_class>> thue_brute_force(const mpz_class& m,
                                                              const mpz_class& y_bound) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    mpz_class x;
    for (mpz_class y = -y_bound; y <= y_bound; ++y) {
        mpz_class t = m + 2 * y * y * y;
        if (exact_cube_root(t, x)) out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ThueSolutionSet solve_thue_cubic(const mpz_class& m) {
    if (m == 0) throw InvalidParameters("solve_thue_cubic: m must be nonzero");
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 62) {
        throw InvalidParameters("solve_thue_cubic: |m| beyond 2^62 is not desk scale");
    }

    ThueSolutionSet res;
    res.m = m;
    res.method = "convergent-certified";

    // Cutoff so that for |y| > y0 a solution forces
    //   |2^(1/3) - x/y| <= (4/3)*2^(-2/3)*|m|/|y|^3 < 1/(2 y^2),
    // which needs |y| > (8/3)*2^(-2/3)*|m| ~ 1.68|m|; taken with a wide
    // margin.
    mpz_class y0 = 10 * ::abs(m);
    if (y0 < 1000) y0 = 1000;
    res.brute_cutoff = y0;

    std::set<std::pair<mpz_class, mpz_class>> sols;
    for (auto& s : thue_brute_force(m, y0)) sols.insert(s);

    // Above the cutoff: sweep convergents of 2^(1/3) with q below the proven
    // bound, times cube divisors of m (a solution with gcd g has g^3 | m).
    auto bound = logforms::bound_thue_cubic(m);
    res.bound_log10 = bound.log10_bound.enc().hi_q();
    mpz_class q_limit = mpz_class(::abs(m) * 300000);
    mpz_pow_ui(q_limit.get_mpz_t(), q_limit.get_mpz_t(), 23);

    Real alpha = root(Real(2), 3);
    auto convs = cf::convergents_while(alpha, q_limit);
    res.convergents_tested = convs.size();
    auto divisors = cube_divisors(m);
    mpz_class x;
    for (const auto& c : convs) {
        for (const auto& g : divisors) {
            mpz_class px = g * c.p, py = g * c.q;
            if (px * px * px - 2 * py * py * py == m) sols.insert({px, py});
            if (-(px * px * px) + 2 * py * py * py == m) sols.insert({-px, -py});
        }
    }

    res.solutions.assign(sols.begin(), sols.end());
    return res;
}

}  // namespace solvers
}  // namespace dioph
