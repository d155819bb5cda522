#include <doctest.h>

#include "dioph/classfield/classfield.hpp"
#include "dioph/errors.hpp"
#include "dioph/support/factor.hpp"

using namespace dioph;
using namespace dioph::classnum;

TEST_CASE("single class numbers") {
    CHECK(class_number(163).h == 1);
    CHECK(class_number(163).discriminant == -163);
    CHECK(class_number(5).h == 2);
    CHECK(class_number(5).discriminant == -20);
    CHECK(class_number(1).h == 1);
    CHECK(class_number(1).discriminant == -4);
    CHECK(class_number(2).h == 1);
    CHECK(class_number(6).h == 2);
    CHECK(class_number(23).h == 3);
    CHECK_THROWS_AS((void)class_number(4), NotSquarefree);
    CHECK_THROWS_AS((void)class_number(12), NotSquarefree);
    CHECK_THROWS_AS((void)class_number(0), InvalidParameters);
}

TEST_CASE("gauss lists up to 500") {
    auto h1 = gauss_list(1, 500);
    CHECK(h1 == std::vector<mpz_class>{1, 2, 3, 7, 11, 19, 43, 67, 163});
    auto h2 = gauss_list(2, 500);
    CHECK(h2 == std::vector<mpz_class>{5, 6, 10, 13, 15, 22, 35, 37, 51, 58, 91, 115, 123, 187,
                                       235, 267, 403, 427});
    auto prefix = gauss_list(1, 2);
    CHECK(prefix == std::vector<mpz_class>{1, 2});
}

TEST_CASE("two enumeration orders agree for d <= 1000") {
    for (long d = 1; d <= 1000; ++d) {
        auto f = factorize(d);
        bool squarefree = true;
        for (const auto& pp : f) {
            if (pp.e > 1) squarefree = false;
        }
        if (!squarefree) continue;
        CHECK(class_number(d).h == class_number_divisor_oracle(d));
    }
}

TEST_CASE("genus lower bound: two odd prime factors force even h") {
    for (long d = 1; d <= 1000; ++d) {
        auto f = factorize(d);
        bool squarefree = true;
        int odd_primes = 0;
        for (const auto& pp : f) {
            if (pp.e > 1) squarefree = false;
            if (pp.p % 2 == 1) ++odd_primes;
        }
        if (!squarefree || odd_primes < 2) continue;
        CHECK(class_number(d).h >= 2);
    }
}

TEST_CASE("e^(pi sqrt(163)) digits") {
    auto n = near_integer_163(36);
    CHECK(n.integer_part == "262537412640768743");
    CHECK(n.fractional_digits.substr(0, 30) == "999999999999250072597198185688");

    // the d = 67 analogue is close to an integer but much less so
    auto m = near_integer_exp_pi_sqrt(67, 10);
    CHECK(m.integer_part == "147197952743");
    CHECK(m.fractional_digits == "9999986624");
}

TEST_CASE("idoneal checks") {
    CHECK(is_idoneal(1848).idoneal);
    auto w = is_idoneal(11);
    CHECK(!w.idoneal);
    CHECK(w.x * w.y + w.y * w.z + w.z * w.x == 11);
    CHECK((w.x == 1 && w.y == 2 && w.z == 3));
    CHECK(is_idoneal(1).idoneal);
}

TEST_CASE("the idoneal list: anchored ends, 65 members") {
    auto full = idoneal_list(10000);
    REQUIRE(full.size() == 65);
    std::vector<unsigned long> prefix(full.begin(), full.begin() + 18);
    CHECK(prefix == std::vector<unsigned long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16,
                                               18, 21, 22, 24});
    std::vector<unsigned long> suffix(full.end() - 8, full.end());
    CHECK(suffix == std::vector<unsigned long>{408, 462, 520, 760, 840, 1320, 1365, 1848});
}

TEST_CASE("idoneal verdicts are stable under a doubled search cube") {
    // independent bounded search with an explicit cube, then doubled
    auto brute = [](unsigned long n, unsigned long cube) {
        for (unsigned long x = 1; x <= cube; ++x) {
            for (unsigned long y = x + 1; y <= cube; ++y) {
                for (unsigned long z = y + 1; z <= cube; ++z) {
                    if (x * y + y * z + z * x == n) return false;
                }
            }
        }
        return true;
    };
    for (unsigned long n = 1; n <= 2000; n += 37) {
        bool v1 = brute(n, n / 2 + 3);
        bool v2 = brute(n, n + 6);
        CHECK(v1 == v2);
        CHECK(v2 == is_idoneal(n).idoneal);
    }
}
