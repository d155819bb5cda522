#include <doctest.h>

#include "dioph/errors.hpp"
#include "dioph/logforms/logforms.hpp"

using namespace dioph;
using namespace dioph::logforms;

namespace {

bool within(const Real& x, double lo, double hi) {
    mpq_class l(lo * 1e9, 1e9), h(hi * 1e9, 1e9);
    l.canonicalize();
    h.canonicalize();
    Real r = x.refined(256);
    return r.enc().certainly_gt(l) && r.enc().certainly_lt(h);
}

}  // namespace

TEST_CASE("four-logarithm bound: the H < 10^132 instance") {
    auto res = bound_lf4(BoundRequest::uniform(2, mpq_class(1, 2), 4, 4));
    CHECK(res.formula == "lf4");
    CHECK(within(res.log10_bound, 131.0, 132.0));
}

TEST_CASE("four-logarithm bound: n = 1 direct substitution") {
    // (4 * 16^2 * log 4)^9: exact cross-check against the formula computed
    // in a different arrangement
    auto res = bound_lf4(BoundRequest::uniform(1, 1, 4, 4));
    Real expected = Real(9) * log10(Real(4 * 256) * log(Real(4)));
    Real diff = abs(res.log10_bound - expected).refined(512);
    CHECK(diff.enc().certainly_lt(mpq_class(1, 1000000000)));
}

TEST_CASE("dependence relation bound") {
    auto rel = bound_dependence_relation(BoundRequest::uniform(2, 1, 4, 4));
    auto lf4 = bound_lf4(BoundRequest::uniform(2, 1, 4, 4));
    Real diff = abs(rel.log10_bound - lf4.log10_bound).refined(512);
    CHECK(diff.enc().certainly_lt(mpq_class(1, 1000000000)));
    CHECK(rel.formula == "rel");

    // n = 3: exponent 49 on 4^9 4^6 log 4
    auto r3 = bound_dependence_relation(BoundRequest::uniform(3, 1, 4, 4));
    Real expected = Real(49) * log10(Real(mpz_class(262144) * 4096) * log(Real(4)));
    CHECK(abs(r3.log10_bound - expected).refined(512).enc().certainly_lt(mpq_class(1, 1000000)));

    CHECK_THROWS_AS((void)bound_dependence_relation(BoundRequest::uniform(1, 1, 4, 4)),
                    InvalidParameters);
}

TEST_CASE("monotonicity in heights and delta") {
    auto a4 = bound_lf4(BoundRequest::uniform(2, 1, 4, 4));
    auto a100 = bound_lf4(BoundRequest::uniform(2, 1, 4, 100));
    auto a10 = bound_lf4(BoundRequest::uniform(2, 1, 4, mpz_class("10000000000")));
    CHECK(compare_greater(a100.log10_bound, a4.log10_bound).is_true());
    CHECK(compare_greater(a10.log10_bound, a100.log10_bound).is_true());

    auto d1 = bound_lf4(BoundRequest::uniform(2, 1, 4, 4));
    auto dhalf = bound_lf4(BoundRequest::uniform(2, mpq_class(1, 2), 4, 4));
    auto dtenth = bound_lf4(BoundRequest::uniform(2, mpq_class(1, 10), 4, 4));
    CHECK(compare_greater(dhalf.log10_bound, d1.log10_bound).is_true());
    CHECK(compare_greater(dtenth.log10_bound, dhalf.log10_bound).is_true());

    auto deg6 = bound_lf4(BoundRequest::uniform(2, 1, 6, 4));
    CHECK(compare_greater(deg6.log10_bound, d1.log10_bound).is_true());
}

TEST_CASE("clamping below the conventions leaves a note") {
    auto low = bound_lf4(BoundRequest::uniform(2, 1, 2, 2));
    auto floor4 = bound_lf4(BoundRequest::uniform(2, 1, 4, 4));
    CHECK(!low.notes.empty());
    Real diff = abs(low.log10_bound - floor4.log10_bound).refined(512);
    CHECK(diff.enc().certainly_lt(mpq_class(1, 1000000000)));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS((void)bound_lf4(BoundRequest::uniform(2, 0, 4, 4)), InvalidParameters);
    CHECK_THROWS_AS((void)bound_lf4(BoundRequest::uniform(2, 2, 4, 4)), InvalidParameters);
    BoundRequest empty;
    empty.heights.clear();
    CHECK_THROWS_AS((void)bound_lf4(empty), InvalidParameters);
}

TEST_CASE("1977 fully explicit bound") {
    // n = 2, D = 1, A1 = A2 = 16, B = 10, rational case:
    // log10 = 32^400 (log 16)^2 log(log 16); its log10 is near 602.95
    BoundRequest req;
    req.n = 2;
    req.field_degree = 1;
    req.heights = {Real(16)};
    req.coeff_height = 10;
    auto res = bound_sharp77(req, false);
    CHECK(res.formula == "sharp77-rational");
    CHECK(within(log10(res.log10_bound), 602.9, 603.0));

    // doubling B adds C0 Omega log Omega' log10(2) exactly
    BoundRequest req2 = req;
    req2.coeff_height = 20;
    auto res2 = bound_sharp77(req2, false);
    mpz_class c0;
    mpz_ui_pow_ui(c0.get_mpz_t(), 32, 400);
    Real omega = log(Real(16)) * log(Real(16));
    Real expected_delta = Real(mpq_class(c0)) * omega * log(log(Real(16))) * log10(Real(2));
    Real diff = abs((res2.log10_bound - res.log10_bound) - expected_delta).refined(512);
    // compare at the scale of the quantities (1e602): relative gap below 1e-9
    CHECK(compare_greater(expected_delta * Real(mpq_class(1, 1000000000)), diff).is_true());

    // inhomogeneous variant is strictly larger (extra Omega factor, B >= 4)
    auto inh = bound_sharp77(req, true);
    CHECK(compare_greater(inh.log10_bound, res.log10_bound).is_true());

    BoundRequest bad = req;
    bad.n = 1;
    CHECK_THROWS_AS((void)bound_sharp77(bad, false), InvalidParameters);
}

TEST_CASE("1993 bound with C1 = (16 n D)^(2n+4)") {
    // n = 2, D = 1: C1 = 32^8; heights e^4 -> Omega = 16, B = 10^6
    BoundRequest req;
    req.n = 2;
    req.field_degree = 1;
    req.heights = {exp(Real(4))};
    req.coeff_height = 1000000;
    auto res = bound_bw93(req);
    mpz_class expected = mpz_class("1099511627776") * 16 * 6;
    Real diff = abs(res.log10_bound - Real(mpq_class(expected))).refined(512);
    CHECK(compare_greater(Real(mpq_class(expected, mpz_class(1000000000))), diff).is_true());

    // n = 3, D = 12: (16*3*12)^10 * 4^3 * 6
    BoundRequest req3;
    req3.n = 3;
    req3.field_degree = 12;
    req3.heights = {exp(Real(4))};
    req3.coeff_height = 1000000;
    auto res3 = bound_bw93(req3);
    mpz_class c1;
    mpz_ui_pow_ui(c1.get_mpz_t(), 576, 10);
    mpz_class expected3 = c1 * 64 * 6;
    Real diff3 = abs(res3.log10_bound - Real(mpq_class(expected3))).refined(512);
    CHECK(compare_greater(Real(mpq_class(expected3, mpz_class(1000000000))), diff3).is_true());

    // for large B the 1993 bound is the smaller of the two
    BoundRequest big = req;
    big.coeff_height = mpz_class("100000000000000000000");
    CHECK(compare_greater(bound_sharp77(big, false).log10_bound, bound_bw93(big).log10_bound)
              .is_true());
}

TEST_CASE("Mordell bound in double-log scale") {
    auto res = bound_mordell(1621);
    CHECK(res.double_log);
    CHECK(certified_round(res.log10_bound) == 132098);

    auto one = bound_mordell(1);
    CHECK(certified_round(one.log10_bound) == 100000);
    // exact cross-check: the inner exponent for k = 1 is 10^100000 on the
    // nose, so its log10 is exactly 100000
    CHECK(one.log10_bound.refined(256).enc().contains(mpq_class(100000)));
    CHECK(*one.log10_bound.refined(256).width() < mpq_class(1, 1000000));

    // |k| monotone
    CHECK(compare_greater(bound_mordell(-1622).log10_bound, res.log10_bound).is_true());
    CHECK(compare_greater(res.log10_bound, bound_mordell(-1621).log10_bound).is_false());
    CHECK_THROWS_AS((void)bound_mordell(0), InvalidParameters);
}

TEST_CASE("cubic Thue bound") {
    auto res = bound_thue_cubic(1621);
    CHECK(within(res.log10_bound, 199.0, 201.0));
    auto neg = bound_thue_cubic(-1621);
    Real diff = abs(res.log10_bound - neg.log10_bound).refined(512);
    CHECK(diff.enc().certainly_lt(mpq_class(1, mpz_class("1000000000000"))));

    auto one = bound_thue_cubic(1);
    CHECK(within(one.log10_bound, 125.9, 126.1));
    CHECK_THROWS_AS((void)bound_thue_cubic(0), InvalidParameters);

    // log-space value agrees with exact integer exponentiation
    mpz_class exact;
    mpz_class base = 300000 * mpz_class(1621);
    mpz_pow_ui(exact.get_mpz_t(), base.get_mpz_t(), 23);
    Real direct = log10(Real(mpq_class(exact)));
    Real gap = abs(res.log10_bound - direct).refined(512);
    CHECK(gap.enc().certainly_lt(mpq_class(1, 1000000000)));
}
