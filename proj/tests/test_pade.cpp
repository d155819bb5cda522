#include <doctest.h>

#include <random>

#include "dioph/contfrac/contfrac.hpp"
#include "dioph/pade/pade.hpp"

using namespace dioph;
using namespace dioph::pade;

namespace {

// Exact series of A(x) - (1-x)^(1/3) B(x) up to the given order.
std::vector<mpq_class> defect_series(const PadePair& p, unsigned order) {
    auto series = cuberoot_series(order);
    std::vector<mpq_class> out(order + 1, 0);
    for (unsigned i = 0; i <= order; ++i) {
        if (i < p.a.size()) out[i] += p.a[i];
        for (unsigned j = 0; j <= i && j < p.b.size(); ++j) {
            out[i] -= p.b[j] * series[i - j];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("closed-form coefficients at small order") {
    auto p0 = pade_coefficients(0);
    CHECK(p0.b == std::vector<mpq_class>{1});
    CHECK(p0.a == std::vector<mpq_class>{1});

    auto p1 = pade_coefficients(1);
    REQUIRE(p1.b.size() == 2);
    CHECK(p1.b[0] == 1);
    CHECK(p1.b[1] == mpq_class(-1, 3));  // ((1/3-1)(-1))/((1)(-2))
}

TEST_CASE("contact order: the defect starts exactly at x^(2r+1)") {
    for (unsigned r = 0; r <= 20; ++r) {
        auto p = pade_coefficients(r);
        auto d = defect_series(p, 2 * r + 1);
        for (unsigned i = 0; i <= 2 * r; ++i) CHECK(d[i] == 0);
        CHECK(d[2 * r + 1] != 0);
    }
}

TEST_CASE("closed form agrees with the linear-algebra construction") {
    for (unsigned r = 0; r <= 20; ++r) {
        auto a = pade_coefficients(r);
        auto b = pade_coefficients_linalg(r);
        CHECK(a.b == b.b);
        CHECK(a.a == b.a);
    }
}

TEST_CASE("approximants to the cube root of 2") {
    auto ws = approximants_to_cube_root2(5);
    REQUIRE(ws.size() == 5);
    CHECK(ws[0] == mpq_class(5, 4));
    CHECK(ws[1] == mpq_class(635, 504));
    CHECK(ws[2] == mpq_class(96389, 76504));
    CHECK(ws[3] == mpq_class(15240955, 12096754));
    CHECK(ws[4] == mpq_class(mpz_class("26990767415"), mpz_class("21422586294")));

    // the last is accurate to 19 decimal places
    Real err = abs(Real::parse("root(2, 3)") - Real(ws[4])).refined(256);
    mpz_class e19;
    mpz_ui_pow_ui(e19.get_mpz_t(), 10, 19);
    CHECK(err.enc().certainly_lt(mpq_class(1, e19)));
}

TEST_CASE("approximant error decreases monotonically") {
    auto ws = approximants_to_cube_root2(10);
    Real alpha = Real::parse("root(2, 3)").refined(512);
    for (size_t i = 1; i < ws.size(); ++i) {
        Real prev = abs(alpha - Real(ws[i - 1]));
        Real cur = abs(alpha - Real(ws[i]));
        CHECK(compare_greater(prev, cur).is_true());
    }
}

TEST_CASE("the 3-adic feature: denominators stay prime to 3") {
    const mpq_class x0(3, 128);
    for (unsigned r = 0; r <= 20; ++r) {
        auto p = pade_coefficients(r);
        mpq_class bv = 0;
        for (size_t i = p.b.size(); i-- > 0;) bv = bv * x0 + p.b[i];
        mpz_class pow128;
        mpz_ui_pow_ui(pow128.get_mpz_t(), 128, r);
        mpq_class cleared = bv * pow128;
        CHECK(cleared.get_den() % 3 != 0);
        // and the same for A_r(3/128)
        mpq_class av = 0;
        for (size_t i = p.a.size(); i-- > 0;) av = av * x0 + p.a[i];
        mpq_class cleared_a = av * pow128;
        CHECK(cleared_a.get_den() % 3 != 0);
    }
}

TEST_CASE("effective measure of the cube root of 2") {
    Real alpha = Real::parse("root(2, 3)");
    auto ok = verify_effective_measure(alpha, mpq_class(1, 1000000), mpq_class(2955, 1000),
                                       1000000);
    CHECK(ok.holds == Truth::True);
    CHECK(ok.convergents_checked > 5);
    CHECK(ok.slack_log10_lower > 0);

    // kappa = 2 must fail: every convergent beats 1/q^2
    auto bad = verify_effective_measure(alpha, 1, 2, 1000000);
    CHECK(bad.holds == Truth::False);
    CHECK(bad.worst.q >= 1);
}

TEST_CASE("Baker-Stewart measure for the cube root of 5") {
    mpq_class c(1);
    for (int i = 0; i < 12900; ++i) c /= 10;
    mpq_class kappa(mpz_class("29999999999998"), mpz_class("10000000000000"));
    auto ok = verify_effective_measure(Real::parse("root(5, 3)"), c, kappa, 1000000);
    CHECK(ok.holds == Truth::True);
}

TEST_CASE("rational alpha is rejected by an exact convergent hit") {
    auto res = verify_effective_measure(Real(mpq_class(22, 7)), mpq_class(1, 100), 3, 1000);
    CHECK(res.holds == Truth::False);
}

TEST_CASE("convergents are worst cases among all denominators") {
    Real alpha = Real::parse("root(2, 3)");
    auto convs = cf::convergents_up_to(alpha, 4);
    Interval enc = alpha.refined(320).enc();
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        long q = 2 + static_cast<long>(rng() % 9998);
        bool is_conv = false;
        cf::Convergent last{1, 1};
        for (const auto& c : convs) {
            if (c.q == q) is_conv = true;
            if (c.q <= q) last = c;
        }
        if (is_conv) continue;
        Interval dq = Interval::nearest_int_dist(
            Interval::mul(enc, Interval::from_integer(q, 320), 320), 320);
        Interval dc = Interval::nearest_int_dist(
            Interval::mul(enc, Interval::from_integer(last.q, 320), 320), 320);
        CHECK(mpfr_cmp(dq.lo(), dc.hi()) > 0);
    }
}
