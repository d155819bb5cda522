#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dioph/numeric/real.hpp"

namespace dioph {
namespace classnum {

// Class number of the imaginary quadratic field Q(sqrt(-d)) for squarefree
// d >= 1, counted as reduced primitive positive-definite forms (a, b, c) of
// discriminant -d (d = 3 mod 4) or -4d (otherwise).
struct FormClassCount {
    mpz_class d;
    mpz_class discriminant;
    unsigned long h = 0;
};

FormClassCount class_number(const mpz_class& d);

// Same count by a different enumeration order (outer loop over b, divisor
// split of (b^2 - D)/4); oracle for cross-checks.
unsigned long class_number_divisor_oracle(const mpz_class& d);

// All squarefree d <= d_max with h(d) = h, exhaustive and sorted.
std::vector<mpz_class> gauss_list(unsigned long h, const mpz_class& d_max,
                                  unsigned parallelism = 0);

// Certified decimal expansion of e^{pi sqrt(163)}.
struct NearInteger {
    std::string integer_part;
    std::string fractional_digits;
    Real value;
};
NearInteger near_integer_163(size_t frac_digits = 36);
NearInteger near_integer_exp_pi_sqrt(unsigned long d, size_t frac_digits);

// Idoneal test: n is idoneal iff no distinct 1 <= x < y < z have
// xy + yz + zx = n.  The witness triple is returned when one exists.
struct IdonealCheck {
    bool idoneal = false;
    unsigned long x = 0, y = 0, z = 0;
};
IdonealCheck is_idoneal(unsigned long n);
std::vector<unsigned long> idoneal_list(unsigned long n_max);

}  // namespace classnum
}  // namespace dioph
