#pragma once

#include <gmpxx.h>

#include <vector>

namespace dioph {
namespace abc {

// g(k) = 2^k + [(3/2)^k] - 2; the formula is certified at k whenever
// ||(3/2)^k|| >= (3^k + 2^k)/(4^k - 2^k), checked here in exact rational
// arithmetic for 5 <= k <= k_max.
//
// A violation of that inequality is only a failure of the certificate: the
// distance criterion also fires when (3/2)^k is near an integer from below,
// which is harmless for g(k).  The tight classical condition
// 3^k mod 2^k <= 2^k - [(3/2)^k] - 2 is evaluated alongside; only its
// failures (formula_threats) would touch the formula.
struct WaringReport {
    unsigned long k_max = 0;
    std::vector<unsigned long> violations;       // of the distance inequality
    std::vector<unsigned long> formula_threats;  // of the one-sided condition
};

WaringReport waring_check(unsigned long k_max);

mpz_class waring_g(unsigned long k);

// ||(3/2)^k|| as an exact rational.
mpq_class three_halves_distance(unsigned long k);

}  // namespace abc
}  // namespace dioph
