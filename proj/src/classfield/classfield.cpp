#include "dioph/classfield/classfield.hpp"

#include <algorithm>

#include "dioph/errors.hpp"
#include "dioph/support/factor.hpp"
#include "dioph/support/parallel.hpp"

namespace dioph {
namespace classnum {

namespace {

bool squarefree(const mpz_class& d) {
    if (d < 1) return false;
    auto f = factorize(d);
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.e == 1; });
}

mpz_class field_discriminant(const mpz_class& d) {
    // d = 3 mod 4: disc = -d, else disc = -4d (the convention that puts
    // d = 1, 2 in the h = 1 list).
    return mpz_class(d % 4) == 3 ? mpz_class(-d) : mpz_class(-4 * d);
}

unsigned long count_reduced_forms(const mpz_class& disc) {
    // (a, b, c): b^2 - 4ac = disc, |b| <= a <= c, primitive, with b >= 0
    // when |b| = a or a = c.
    unsigned long h = 0;
    mpz_class neg = -disc;
    mpz_class a_max_sq = neg / 3;
    for (mpz_class a = 1; a * a <= a_max_sq; ++a) {
        // b = disc (mod 2)
        for (mpz_class b = mpz_class(neg % 2); b <= a; b += 2) {
            mpz_class num = b * b + neg;  // b^2 - disc
            mpz_class den = 4 * a;
            if (num % den != 0) continue;
            mpz_class c = num / den;
            if (c < a) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            h += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return h;
}

}  // namespace

FormClassCount class_number(const mpz_class& d) {
    if (d < 1) throw InvalidParameters("class_number: d must be >= 1");
    if (!squarefree(d)) throw NotSquarefree("class_number: d = " + d.get_str() + " is not squarefree");
    FormClassCount out;
    out.d = d;
    out.discriminant = field_discriminant(d);
    out.h = count_reduced_forms(out.discriminant);
    return out;
}

unsigned long class_number_divisor_oracle(const mpz_class& d) {
    if (!squarefree(d)) throw NotSquarefree("oracle: d not squarefree");
    mpz_class disc = field_discriminant(d);
    mpz_class neg = -disc;
    unsigned long h = 0;
    // Outer loop over b, then split (b^2 - disc)/4 = a*c over divisors.
    for (mpz_class b = mpz_class(neg % 2); 3 * b * b <= neg; b += 2) {
        mpz_class m4 = b * b + neg;
        if (m4 % 4 != 0) continue;
        mpz_class m = m4 / 4;  // = a*c
        for (mpz_class a = (b > 1 ? b : mpz_class(1)); a * a <= m; ++a) {
            if (m % a != 0) continue;
            mpz_class c = m / a;
            if (b > a || c < a) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            h += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return h;
}

std::vector<mpz_class> gauss_list(unsigned long h, const mpz_class& d_max,
                                  unsigned parallelism) {
    if (h < 1 || d_max < 1) throw InvalidParameters("gauss_list: h, d_max must be >= 1");
    if (!d_max.fits_slong_p()) throw InvalidParameters("gauss_list: d_max too large");
    if (parallelism == 0) parallelism = default_parallelism();
    long dm = mpz_get_si(d_max.get_mpz_t());
    auto found = parallel_chunks<mpz_class>(
        1, dm + 1, parallelism, [&](long long lo, long long hi, std::vector<mpz_class>& out) {
            for (long long d = lo; d < hi; ++d) {
                mpz_class dz(static_cast<long>(d));
                if (!squarefree(dz)) continue;
                if (count_reduced_forms(field_discriminant(dz)) == h) out.push_back(dz);
            }
        });
    return found;
}

NearInteger near_integer_exp_pi_sqrt(unsigned long d, size_t frac_digits) {
    NearInteger out;
    out.value = exp(Real::pi() * sqrt(Real(static_cast<long>(d))));
    std::string s = certified_decimal(out.value, frac_digits);
    auto dot = s.find('.');
    out.integer_part = s.substr(0, dot);
    out.fractional_digits = dot == std::string::npos ? "" : s.substr(dot + 1);
    return out;
}

NearInteger near_integer_163(size_t frac_digits) {
    return near_integer_exp_pi_sqrt(163, frac_digits);
}

IdonealCheck is_idoneal(unsigned long n) {
    if (n < 1) throw InvalidParameters("is_idoneal: n must be >= 1");
    // xy + yz + zx = n with x < y < z forces xy + (x+y)(y+1) <= n, so both
    // loops are tightly bounded.
    for (unsigned long x = 1; 3 * x * x + 6 * x + 2 <= n; ++x) {
        for (unsigned long y = x + 1;; ++y) {
            unsigned long base = x * y;
            unsigned long slope = x + y;
            if (base + slope * (y + 1) > n) break;
            unsigned long rem = n - base;
            if (rem % slope == 0) {
                unsigned long z = rem / slope;
                if (z > y) return {false, x, y, z};
            }
        }
    }
    return {true, 0, 0, 0};
}

std::vector<unsigned long> idoneal_list(unsigned long n_max) {
    std::vector<unsigned long> out;
    for (unsigned long n = 1; n <= n_max; ++n) {
        if (is_idoneal(n).idoneal) out.push_back(n);
    }
    return out;
}

}  // namespace classnum
}  // namespace dioph
