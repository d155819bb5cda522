#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dioph/numeric/real.hpp"

namespace dioph {
namespace abc {

// One a + b + c = 0 triple with its squarefree kernel S, prime count s and
// quality log(max)/log(S).
struct AbcTriple {
    mpz_class a, b, c;
    mpz_class S;
    unsigned s = 0;
    Real quality;
    mpz_class max_abs;
};

AbcTriple analyze_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c);

// Certified comparison of max{|a|,|b|,|c|} against C0 * S * (log S)^s / s!.
struct RefinementCheck {
    Truth holds = Truth::Unknown;
    Real rhs;       // the bound being compared against
    Real slack;     // rhs / max
};
RefinementCheck check_baker_refinement(const AbcTriple& t, const mpq_class& c0);

struct ScanEntry {
    unsigned long a = 0, b = 0, c = 0;
    unsigned long radical = 0;
    unsigned s = 0;
    double quality = 0;  // ranking key; exact recheck available via analyze_triple
};

struct ScanReport {
    unsigned long max_c = 0;
    mpq_class c0;
    unsigned long long triples = 0;
    std::vector<ScanEntry> top_quality;          // sorted by quality descending
    std::vector<ScanEntry> refinement_failures;  // triples with max > C0 S (log S)^s/s!
};

// Exhaustive scan over 1 <= a <= b < c = a+b <= max_c with gcd(a,b) = 1.
// Radicals come from a smallest-prime-factor sieve; candidate refinement
// failures are re-checked with certified arithmetic before being reported.
ScanReport scan_triples(unsigned long max_c, const mpq_class& c0, unsigned parallelism = 0,
                        size_t top = 25);

}  // namespace abc
}  // namespace dioph
