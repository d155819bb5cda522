#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace dioph {

struct PrimePower {
    mpz_class p;
    unsigned e;
};

// Complete factorisation of |n|, n != 0: trial division to 10^6, then
// deterministic Miller-Rabin plus Pollard-Brent rho for cofactors below
// 2^64.  A remaining cofactor above 2^64 raises FactorizationTooHard rather
// than trusting a probabilistic primality answer.
std::vector<PrimePower> factorize(const mpz_class& n);

bool is_prime_u64(uint64_t n);

// Product of the distinct primes of a factorisation.
mpz_class radical(const std::vector<PrimePower>& f);

}  // namespace dioph
