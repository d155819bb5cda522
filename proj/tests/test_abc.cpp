#include <doctest.h>

#include "dioph/abc/abc.hpp"
#include "dioph/abc/waring.hpp"
#include "dioph/errors.hpp"
#include "dioph/support/factor.hpp"

using namespace dioph;
using namespace dioph::abc;

TEST_CASE("triple (1, 8, -9)") {
    auto t = analyze_triple(1, 8, -9);
    CHECK(t.S == 6);
    CHECK(t.s == 2);
    CHECK(t.max_abs == 9);
    Real q = t.quality.refined(256);
    CHECK(q.enc().certainly_gt(mpq_class(1226, 1000)));
    CHECK(q.enc().certainly_lt(mpq_class(1227, 1000)));
}

TEST_CASE("triple (2, 6436341, -6436343)") {
    // 6436341 = 3^10 * 109, 6436343 = 23^5
    auto t = analyze_triple(2, 6436341, -6436343);
    CHECK(t.S == 15042);
    CHECK(t.s == 4);
}

TEST_CASE("degenerate triple (1, 1, -2)") {
    auto t = analyze_triple(1, 1, -2);
    CHECK(t.S == 2);
    CHECK(t.s == 1);
    Real q = t.quality.refined(256);
    CHECK(q.enc().contains(1));
    CHECK(*q.width() < mpq_class(1, mpz_class("100000000000000000000")));
}

TEST_CASE("triple validation") {
    CHECK_THROWS_AS((void)analyze_triple(0, 1, -1), InvalidParameters);
    CHECK_THROWS_AS((void)analyze_triple(1, 2, -4), NotZeroSum);
    CHECK_THROWS_AS((void)analyze_triple(2, 2, -4), NotCoprime);
}

TEST_CASE("kernel is squarefree, divides abc, and is symmetric") {
    auto t = analyze_triple(5, 27, -32);
    CHECK(t.S == 30);
    for (const auto& pp : factorize(t.S)) CHECK(pp.e == 1);
    mpz_class prod = ::abs(t.a * t.b * t.c);
    CHECK(prod % t.S == 0);
    // permutations and a global sign flip keep S and s
    auto perm = analyze_triple(27, -32, 5);
    auto flip = analyze_triple(-5, -27, 32);
    CHECK(perm.S == t.S);
    CHECK(flip.S == t.S);
    CHECK(perm.s == t.s);
    CHECK(flip.s == t.s);
}

TEST_CASE("refinement check with C0 = 6/5") {
    auto good = check_baker_refinement(analyze_triple(1, 8, -9), mpq_class(6, 5));
    CHECK(good.holds == Truth::True);
    Real rhs = good.rhs.refined(256);
    CHECK(rhs.enc().certainly_gt(mpq_class(1155, 100)));
    CHECK(rhs.enc().certainly_lt(mpq_class(1156, 100)));

    auto degen = check_baker_refinement(analyze_triple(1, 1, -2), mpq_class(6, 5));
    CHECK(degen.holds == Truth::False);
    Real rhs2 = degen.rhs.refined(256);
    CHECK(rhs2.enc().certainly_gt(mpq_class(166, 100)));
    CHECK(rhs2.enc().certainly_lt(mpq_class(167, 100)));

    // monotone in C0: a tenfold constant clears the degenerate case
    auto lifted = check_baker_refinement(analyze_triple(1, 1, -2), mpq_class(12));
    CHECK(lifted.holds == Truth::True);
}

TEST_CASE("scan at 100: the (1, 80, -81) family tops the chart") {
    auto rep = scan_triples(100, mpq_class(6, 5));
    REQUIRE(!rep.top_quality.empty());
    CHECK(rep.top_quality[0].a == 1);
    CHECK(rep.top_quality[0].b == 80);
    CHECK(rep.top_quality[0].c == 81);
    CHECK(rep.top_quality[0].quality > 1.0);
    // independent count of coprime triples a <= b < c = a+b <= 100
    unsigned long long count = 0;
    for (unsigned long c = 2; c <= 100; ++c) {
        for (unsigned long a = 1; 2 * a <= c; ++a) {
            if (std::gcd(a, c) == 1) ++count;
        }
    }
    CHECK(rep.triples == count);
    // the only refinement failure on this range is the degenerate triple
    REQUIRE(rep.refinement_failures.size() == 1);
    CHECK(rep.refinement_failures[0].a == 1);
    CHECK(rep.refinement_failures[0].b == 1);
    CHECK(rep.refinement_failures[0].c == 2);
}

TEST_CASE("scan at 2: the single triple") {
    auto rep = scan_triples(2, mpq_class(6, 5));
    CHECK(rep.triples == 1);
    REQUIRE(rep.top_quality.size() == 1);
    CHECK(rep.top_quality[0].c == 2);
}

TEST_CASE("scan quality >= 1 exists whenever 81 is reachable") {
    auto rep = scan_triples(81, mpq_class(6, 5));
    bool has_high = false;
    for (const auto& e : rep.top_quality) {
        if (e.quality > 1.0) has_high = true;
    }
    CHECK(has_high);
}

TEST_CASE("scan is deterministic across parallelism") {
    auto a = scan_triples(2000, mpq_class(6, 5), 1);
    auto b = scan_triples(2000, mpq_class(6, 5), 4);
    REQUIRE(a.top_quality.size() == b.top_quality.size());
    for (size_t i = 0; i < a.top_quality.size(); ++i) {
        CHECK(a.top_quality[i].a == b.top_quality[i].a);
        CHECK(a.top_quality[i].c == b.top_quality[i].c);
        CHECK(a.top_quality[i].quality == b.top_quality[i].quality);
    }
    CHECK(a.triples == b.triples);
}

TEST_CASE("waring g values") {
    CHECK(waring_g(2) == 4);
    CHECK(waring_g(3) == 9);
    CHECK(waring_g(4) == 19);
    CHECK(waring_g(5) == 37);
    CHECK(waring_g(6) == 73);
}

TEST_CASE("waring distances are exact rationals") {
    CHECK(three_halves_distance(5) == mpq_class(13, 32));
    // (3^5 + 2^5)/(4^5 - 2^5) = 275/992 < 13/32: no violation at k = 5
    CHECK(mpq_class(13, 32) > mpq_class(275, 992));
}

TEST_CASE("waring check to 10^4: the single distance violation is k = 7") {
    // oracle-computed and frozen: ||(3/2)^7|| = 11/128 < 2315/16256, the one
    // k below 10^4 where the distance certificate is inconclusive; the
    // one-sided condition behind g(k) itself never fails.
    auto rep = waring_check(10000);
    CHECK(rep.violations == std::vector<unsigned long>{7});
    CHECK(rep.formula_threats.empty());
    CHECK(three_halves_distance(7) == mpq_class(11, 128));
    CHECK(mpq_class(11, 128) < mpq_class(2315, 16256));
    CHECK_THROWS_AS((void)waring_check(4), InvalidParameters);
}
