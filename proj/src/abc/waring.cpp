#include "dioph/abc/waring.hpp"

#include "dioph/errors.hpp"

namespace dioph {
namespace abc {

mpq_class three_halves_distance(unsigned long k) {
    mpz_class p3, p2;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, k);
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, k);
    mpz_class rem = p3 % p2;
    mpz_class near = rem * 2 <= p2 ? rem : mpz_class(p2 - rem);
    mpq_class d(near, p2);
    d.canonicalize();
    return d;
}

mpz_class waring_g(unsigned long k) {
    if (k < 1) throw InvalidParameters("waring_g: k must be >= 1");
    mpz_class p3, p2;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, k);
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, k);
    return p2 + p3 / p2 - 2;
}

WaringReport waring_check(unsigned long k_max) {
    if (k_max < 5) throw InvalidParameters("waring_check: k_max must be >= 5");
    WaringReport rep;
    rep.k_max = k_max;
    mpz_class p2 = 16, p3 = 81, p4 = 256;  // 2^k, 3^k, 4^k at k = 4
    for (unsigned long k = 5; k <= k_max; ++k) {
        p2 *= 2;
        p3 *= 3;
        p4 *= 4;
        // ||(3/2)^k|| >= (3^k + 2^k)/(4^k - 2^k), cross-multiplied exactly:
        //   min(rem, 2^k - rem) * (4^k - 2^k) >= (3^k + 2^k) * 2^k
        mpz_class rem = p3 % p2;
        mpz_class near = rem * 2 <= p2 ? rem : mpz_class(p2 - rem);
        if (near * (p4 - p2) < (p3 + p2) * p2) {
            rep.violations.push_back(k);
        }
        // one-sided condition behind the formula itself
        mpz_class q = p3 / p2;
        if (rem > p2 - q - 2) {
            rep.formula_threats.push_back(k);
        }
    }
    return rep;
}

}  // namespace abc
}  // namespace dioph
