#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace dioph {
namespace solvers {

// Complete certified solution set of a^r - b^s = m with r, s >= 1.
//
// Certification layout: an explicit rectangle r <= r1, s <= s1 is searched
// exactly; outside it any solution satisfies 0 < |r log a - s log b| <
// 2|m| b^{-s} < 1/(4 R), the explicit linear-form bound caps max(r,s) < R,
// and the Legendre criterion forces s/r to sit on a convergent of
// log a / log b, each of which is refuted by a certified inequality.
struct ExpGapCertificate {
    mpq_class baker_bound_log10;  // log10 R
    mpq_class delta;              // hypothesis decay rate used
    unsigned long s1 = 0;         // exact-search height in s
    unsigned long r1 = 0;         // exact-search height in r
    size_t convergents_refuted = 0;
    std::vector<std::pair<std::string, std::string>> fallback_candidates;  // (r, s) pairs
};

struct ExpGapResult {
    mpz_class a, b, m;
    std::vector<std::pair<unsigned long, unsigned long>> solutions;  // (r, s)
    ExpGapCertificate certificate;
};

ExpGapResult solve_exponential_gap(const mpz_class& a, const mpz_class& b, const mpz_class& m);

// Independent oracle: exact search over 1 <= r, s <= cap.
std::vector<std::pair<unsigned long, unsigned long>> expgap_brute_force(const mpz_class& a,
                                                                        const mpz_class& b,
                                                                        const mpz_class& m,
                                                                        unsigned long cap);

}  // namespace solvers
}  // namespace dioph
