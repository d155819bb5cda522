#include <doctest.h>

#include <random>

#include "dioph/errors.hpp"
#include "dioph/numeric/real.hpp"

using namespace dioph;

namespace {

// Frozen reference digits (classical constants, truncated not rounded).
const char* kLn2 = "0.69314718055994530941723212145817656807";
const char* kPi40 = "3.1415926535897932384626433832795028841971";

mpq_class dec(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    mpq_class q(mpz_class(digits), den);
    q.canonicalize();
    return q;
}

mpq_class pow10q(int e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(1, z) : mpq_class(z);
}

}  // namespace

TEST_CASE("log(2) refines to the reference digits") {
    Real x = log(Real(2)) / Real(1);
    x = x.refined_to_width(pow10q(-20));
    CHECK(*x.width() <= pow10q(-20));
    // truncated reference: value in [ref, ref + 10^-38]
    CHECK(x.enc().contains(dec(kLn2) + pow10q(-39)));
    CHECK(certified_decimal(x, 20) == "0.69314718055994530941");
}

TEST_CASE("sqrt(4) is exactly 2 with zero width") {
    Real x = sqrt(Real(4));
    REQUIRE(x.exact().has_value());
    CHECK(*x.exact() == 2);
    CHECK(*x.width() == 0);
}

TEST_CASE("pi at width 1e-40") {
    Real x = Real::pi().refined_to_width(pow10q(-40));
    CHECK(*x.width() <= pow10q(-40));
    CHECK(certified_decimal(x, 40) == kPi40);
}

TEST_CASE("compare: pi vs 355/113 and the 163 near-integer") {
    CHECK(compare_greater(Real::pi(), Real(mpq_class(355, 113))).is_false());
    CHECK(compare_greater(Real(mpq_class(355, 113)), Real::pi()).is_true());
    Real e163 = exp(Real::pi() * sqrt(Real(163)));
    CHECK(compare_greater(e163, Real(mpz_class("262537412640768743"))).is_true());
}

TEST_CASE("compare short-circuits identical recipes") {
    Real x = sqrt(Real(2)) + Real::pi();
    CHECK(compare_greater(x, x).is_false());
}

TEST_CASE("compare of equal-but-distinct irrational recipes stays unknown") {
    Real a = sqrt(Real(2)) * sqrt(Real(2));
    Verdict v = compare_greater(a, Real(2), 4096);
    CHECK(v.is_unknown());
    CHECK(v.width > 0);
}

TEST_CASE("nearest integer distance") {
    Real a = nearest_integer_distance(Real(mpq_class(13, 4)));
    REQUIRE(a.exact().has_value());
    CHECK(*a.exact() == mpq_class(1, 4));

    // ||113 pi|| = 113 (355/113 - pi) ~ 3.014e-5
    Real b = nearest_integer_distance(Real(113) * Real::pi()).refined(256);
    CHECK(b.enc().certainly_gt(mpq_class(3014, 100000000)));
    CHECK(b.enc().certainly_lt(mpq_class(3015, 100000000)));

    Real c = nearest_integer_distance(Real(mpq_class(3, 2)).pow(5));
    REQUIRE(c.exact().has_value());
    CHECK(*c.exact() == mpq_class(13, 32));
}

TEST_CASE("enclosure soundness on random rational expression trees") {
    std::mt19937_64 rng(12345);
    auto rnd_q = [&] {
        long num = static_cast<long>(rng() % 20001) - 10000;
        long den = 1 + static_cast<long>(rng() % 999);
        return mpq_class(num, den);
    };
    for (int i = 0; i < 10000; ++i) {
        mpq_class a = rnd_q(), b = rnd_q(), c = rnd_q();
        if (c == 0) c = 1;
        // (a + b) * a - b / c, exactly and through the interval engine
        mpq_class exact = (a + b) * a - b / c;
        Real r = (Real(a) + Real(b)) * Real(a) - Real(b) / Real(c);
        CHECK(r.enc().contains(exact));
    }
}

TEST_CASE("interval engine nests under refinement of irrational expressions") {
    Real x = (sqrt(Real(2)) + log(Real(3))) / (Real::pi() - exp(Real(1)));
    Real hi = x.refined(512);
    CHECK(mpfr_cmp(hi.enc().lo(), x.enc().lo()) >= 0);
    CHECK(mpfr_cmp(hi.enc().hi(), x.enc().hi()) <= 0);
}

TEST_CASE("monotone refinement") {
    Real x = log(Real(7)) * sqrt(Real(11)) + Real::pi();
    Real a = x.refined(192);
    Real b = a.refined(384);
    Real c = b.refined(768);
    CHECK(*b.width() <= *a.width());
    CHECK(*c.width() <= *b.width());
}

TEST_CASE("compare is antisymmetric on random inputs") {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 200; ++i) {
        long n1 = static_cast<long>(rng() % 1000) + 1;
        long n2 = static_cast<long>(rng() % 1000) + 1;
        Real a = sqrt(Real(n1)) + log(Real(n2));
        Real b = sqrt(Real(n2)) + Real(mpq_class(static_cast<long>(rng() % 7), 3));
        Verdict ab = compare_greater(a, b, 1024);
        Verdict ba = compare_greater(b, a, 1024);
        CHECK(!(ab.is_true() && ba.is_true()));
    }
}

TEST_CASE("||x|| is invariant under integer shifts") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 500; ++i) {
        mpq_class x(static_cast<long>(rng() % 100000) - 50000, 1 + static_cast<long>(rng() % 997));
        long n = static_cast<long>(rng() % 2001) - 1000;
        Real d1 = nearest_integer_distance(Real(x));
        Real d2 = nearest_integer_distance(Real(x + n));
        REQUIRE(d1.exact().has_value());
        REQUIRE(d2.exact().has_value());
        CHECK(*d1.exact() == *d2.exact());
    }
    // irrational shift invariance through enclosures
    Real base = sqrt(Real(31));
    Real d1 = nearest_integer_distance(base).refined(256);
    Real d2 = nearest_integer_distance(base + Real(12)).refined(256);
    CHECK(d1.enc().contains(d2.enc().lo_q()));
    CHECK(d1.enc().contains(d2.enc().hi_q()));
}

TEST_CASE("singular expressions throw NonRefinable") {
    CHECK_THROWS_AS((void)log(sqrt(Real(4)) - Real(2)), NonRefinable);
    CHECK_THROWS_AS((void)(Real(1) / (Real(3) - Real(3))), NonRefinable);
    CHECK_THROWS_AS((void)sqrt(Real(-1)), NonRefinable);
}

TEST_CASE("precision ceiling raises PrecisionExhausted") {
    Real x = Real::pi();
    CHECK_THROWS_AS(x.refined_to_width(pow10q(-200), 256), PrecisionExhausted);
}

TEST_CASE("certified integer extraction") {
    CHECK(certified_floor(Real::pi()) == 3);
    CHECK(certified_ceil(Real::pi()) == 4);
    CHECK(certified_round(Real::pi()) == 3);
    CHECK(certified_floor(Real(mpq_class(-7, 2))) == -4);
    CHECK(certified_ceil(Real(mpq_class(-7, 2))) == -3);
    CHECK(certified_floor(-Real::pi()) == -4);
}

TEST_CASE("expression parser round-trips") {
    for (const char* s : {"355/113", "pi", "log(2 + sqrt(3))/log(3 + sqrt(8))",
                          "root(2, 3)", "(1 + sqrt(5))/2", "exp(1)^3", "2^(1/3)",
                          "1 - 2/3 + 4*5", "abs(1 - pi)", "3.25"}) {
        Real a = Real::parse(s);
        Real b = Real::parse(a.expr()->to_string());
        Real a2 = a.refined(256), b2 = b.refined(256);
        CHECK(a2.enc().contains(b2.enc().lo_q()));
        CHECK(a2.enc().contains(b2.enc().hi_q()));
    }
    CHECK_THROWS_AS((void)Real::parse("2 +"), ParseError);
    CHECK_THROWS_AS((void)Real::parse("foo(3)"), ParseError);
    CHECK(*Real::parse("3.25").exact() == mpq_class(13, 4));
}

TEST_CASE("dyadic serialisation round-trips") {
    Real x = sqrt(Real(2)).refined(192);
    Interval iv = Interval::from_dyadic(x.enc().dyadic_lo(), x.enc().dyadic_hi());
    CHECK(iv.lo_q() == x.enc().lo_q());
    CHECK(iv.hi_q() == x.enc().hi_q());
}
