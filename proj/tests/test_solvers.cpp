#include <doctest.h>

#include <set>

#include "dioph/errors.hpp"
#include "dioph/solvers/expgap.hpp"
#include "dioph/solvers/mordell.hpp"
#include "dioph/solvers/quadruple.hpp"
#include "dioph/solvers/squbes.hpp"
#include "dioph/solvers/thue.hpp"

using namespace dioph;
using namespace dioph::solvers;

TEST_CASE("squbes up to 100 and the degenerate case") {
    auto s = squbes(100);
    std::vector<mpz_class> expected{1, 4, 8, 9, 16, 25, 27, 36, 49, 64, 81, 100};
    CHECK(s.values == expected);
    CHECK(squbes(1).values == std::vector<mpz_class>{1});
}

TEST_CASE("gap 17 appears at (8,25) and at the 143-billion pair") {
    auto s = squbes(mpz_class("143384153000"));
    auto occ = s.occurrences_of_gap(17);
    auto has = [&](const char* from, const char* to) {
        for (const auto& g : occ) {
            if (g.from == mpz_class(from) && g.to == mpz_class(to)) return true;
        }
        return false;
    };
    CHECK(has("8", "25"));
    CHECK(has("143384152904", "143384152921"));
}

namespace {

// Independent Mordell oracle: plain sequential scan.
std::vector<std::pair<mpz_class, mpz_class>> mordell_brute(long k, long bound) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (long x = -bound; x <= bound; ++x) {
        mpz_class t = mpz_class(x) * x * x + k;
        if (t < 0) continue;
        if (mpz_perfect_square_p(t.get_mpz_t())) {
            mpz_class y = sqrt(t);
            out.emplace_back(x, y);
            if (y != 0) out.emplace_back(x, -y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("mordell k = 17") {
    auto res = solve_mordell(17, 10000);
    std::set<mpz_class> xs;
    for (const auto& [x, y] : res.solutions) {
        CHECK(y * y == x * x * x + 17);
        xs.insert(x);
    }
    CHECK(xs == std::set<mpz_class>{-2, -1, 2, 4, 8, 43, 52, 5234});
    bool has_big = false;
    for (const auto& [x, y] : res.solutions) {
        if (x == 5234 && y == 378661) has_big = true;
    }
    CHECK(has_big);
    CHECK(!res.complete);
    CHECK(res.proven_bound.double_log);
}

TEST_CASE("mordell k = 1 and the empty k = 6") {
    auto res = solve_mordell(1, 1000);
    std::vector<std::pair<mpz_class, mpz_class>> expected{
        {-1, 0}, {0, -1}, {0, 1}, {2, -3}, {2, 3}};
    CHECK(res.solutions == expected);
    CHECK(solve_mordell(6, 10000).solutions.empty());
    CHECK_THROWS_AS((void)solve_mordell(0, 100), InvalidParameters);
}

TEST_CASE("mordell agrees with the independent oracle") {
    for (long k : {17L, 1L, 6L, 24L, -2L, -17L}) {
        CHECK(solve_mordell(k, 2000).solutions == mordell_brute(k, 2000));
    }
}

TEST_CASE("mordell solutions clear the single-sentence gap bound") {
    // |x^3 - y^2| = |k| >= 1 > 1e-10 (log x)^(1/10000) for every listed pair
    auto res = solve_mordell(17, 10000);
    for (const auto& [x, y] : res.solutions) {
        if (x < 2) continue;
        Real rhs = Real(mpq_class(1, mpz_class("10000000000"))) *
                   exp(log(log(Real(mpq_class(x)))) / Real(10000));
        CHECK(compare_greater(Real(mpz_class(::abs(x * x * x - y * y))), rhs).is_true());
    }
}

TEST_CASE("thue m = 1") {
    auto res = solve_thue_cubic(1);
    std::vector<std::pair<mpz_class, mpz_class>> expected{{-1, -1}, {1, 0}};
    CHECK(res.solutions == expected);
    for (const auto& [x, y] : res.solutions) CHECK(x * x * x - 2 * y * y * y == 1);
}

TEST_CASE("thue agrees with brute force for |m| <= 50") {
    for (long m = -50; m <= 50; ++m) {
        if (m == 0) continue;
        auto certified = solve_thue_cubic(m).solutions;
        auto brute = thue_brute_force(m, 1000);
        CHECK(certified == brute);
    }
}

TEST_CASE("thue m = 1621: convergent sweep is small and the bound is huge") {
    auto res = solve_thue_cubic(1621);
    CHECK(res.convergents_tested > 300);
    CHECK(res.convergents_tested < 1000);
    CHECK(res.bound_log10 > 199);
    CHECK(res.bound_log10 < 201);
    for (const auto& [x, y] : res.solutions) CHECK(x * x * x - 2 * y * y * y == 1621);
    CHECK(res.solutions == thue_brute_force(1621, 20000));
    CHECK_THROWS_AS((void)solve_thue_cubic(0), InvalidParameters);
}

TEST_CASE("thue handles cube-divisible m") {
    // m = 8: (-2, -2) = 2 * (-1, -1) has gcd 2 and 2^3 | 8
    auto res = solve_thue_cubic(8);
    bool has = false;
    for (const auto& [x, y] : res.solutions) {
        CHECK(x * x * x - 2 * y * y * y == 8);
        if (x == -2 && y == -2) has = true;
    }
    CHECK(has);
    CHECK(res.solutions == thue_brute_force(8, 1000));
}

TEST_CASE("exponential gaps 3^r - 2^s = 1") {
    auto res = solve_exponential_gap(3, 2, 1);
    std::vector<std::pair<unsigned long, unsigned long>> expected{{1, 1}, {2, 3}};
    CHECK(res.solutions == expected);
    CHECK(res.certificate.convergents_refuted > 0);
    CHECK(res.certificate.s1 >= 20);
    CHECK(res.certificate.fallback_candidates.empty());
    CHECK(res.solutions == expgap_brute_force(3, 2, 1, 1000));
}

TEST_CASE("exponential gaps 3^r - 2^s = 1621 is certified empty") {
    auto res = solve_exponential_gap(3, 2, 1621);
    CHECK(res.solutions.empty());
    CHECK(expgap_brute_force(3, 2, 1621, 1000).empty());
}

TEST_CASE("exponential gap rejects dependent bases") {
    CHECK_THROWS_AS((void)solve_exponential_gap(2, 2, 1), MultiplicativelyDependent);
    CHECK_THROWS_AS((void)solve_exponential_gap(4, 2, 1), MultiplicativelyDependent);
    CHECK_THROWS_AS((void)solve_exponential_gap(8, 4, 1), MultiplicativelyDependent);
    CHECK_THROWS_AS((void)solve_exponential_gap(3, 2, 0), InvalidParameters);
}

TEST_CASE("exponential gaps on other bases agree with the oracle") {
    auto a = solve_exponential_gap(6, 12, 24);
    CHECK(a.solutions == expgap_brute_force(6, 12, 24, 400));
    auto b = solve_exponential_gap(5, 3, 2);
    CHECK(b.solutions == expgap_brute_force(5, 3, 2, 400));
    auto c = solve_exponential_gap(2, 3, -1);
    CHECK(c.solutions == expgap_brute_force(2, 3, -1, 400));
}

TEST_CASE("quadruple sequences") {
    auto ys = eqy_sequence(50);
    CHECK(ys[0].x == 1);
    CHECK(ys[1].x == 3);
    CHECK(ys[2].x == 11);
    CHECK(ys[0].y == 1);
    CHECK(ys[2].y == 19);
    for (const auto& e : ys) CHECK(e.y * e.y - 3 * e.x * e.x == -2);
    for (size_t i = 2; i < ys.size(); ++i) {
        CHECK(ys[i].x == 4 * ys[i - 1].x - ys[i - 2].x);
    }

    for (int fam : {1, 2}) {
        auto zs = eqz_sequence(50, fam);
        for (const auto& e : zs) CHECK(e.z * e.z - 8 * e.x * e.x == -7);
        for (size_t i = 2; i < zs.size(); ++i) {
            CHECK(zs[i].x == 6 * zs[i - 1].x - zs[i - 2].x);
        }
    }
    auto f2 = eqz_sequence(3, 2);
    CHECK(f2[2].x == 11);
    CHECK(f2[2].z == 31);
}

TEST_CASE("quadruple end-to-end") {
    auto rep = solve_quadruple();
    CHECK(rep.initial_bound_log10 == 487);
    CHECK(rep.final_bound <= 2000);
    CHECK(rep.no_fifth_element);
    // the only common x below the final bound are x = 1 (N = 0) and
    // x = 11 (N = 120, the quadruple itself)
    std::set<mpz_class> ns;
    for (const auto& m : rep.matches) ns.insert(m.n);
    CHECK(ns == std::set<mpz_class>{0, 120});
    CHECK(rep.form_family1.height1 == 4);
    CHECK(rep.form_family1.height2 == 6);
    CHECK(rep.form_family1.height3 == 2880);
    CHECK(rep.form_family2.height3 == 2880);
    CHECK(!rep.reduction_family1.chain.empty());
    CHECK(!rep.reduction_family2.chain.empty());
    // certificates replay
    for (const auto& cert : rep.reduction_family1.chain) {
        auto prob = rep.problem_family1;
        prob.bound_log10 = cert.old_bound_log10;
        CHECK(reduction::verify_certificate(prob, cert));
    }
}
