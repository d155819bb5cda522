#include "dioph/abc/abc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "dioph/errors.hpp"
#include "dioph/support/factor.hpp"
#include "dioph/support/parallel.hpp"

namespace dioph {
namespace abc {

AbcTriple analyze_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    if (a == 0 || b == 0 || c == 0) throw InvalidParameters("abc: entries must be nonzero");
    if (a + b + c != 0) throw NotZeroSum("abc: a + b + c must be 0");
    if (gcd(a, b) != 1 || gcd(b, c) != 1 || gcd(a, c) != 1) {
        throw NotCoprime("abc: entries must be pairwise coprime");
    }
    AbcTriple t;
    t.a = a;
    t.b = b;
    t.c = c;
    std::set<mpz_class> primes;
    unsigned count = 0;
    t.S = 1;
    for (const mpz_class* v : {&a, &b, &c}) {
        for (const auto& pp : factorize(*v)) {
            if (primes.insert(pp.p).second) {
                t.S *= pp.p;
                ++count;
            }
        }
    }
    t.s = count;
    t.max_abs = std::max(std::max(mpz_class(::abs(a)), mpz_class(::abs(b))), mpz_class(::abs(c)));
    t.quality = log(Real(mpq_class(t.max_abs))) / log(Real(mpq_class(t.S)));
    return t;
}

RefinementCheck check_baker_refinement(const AbcTriple& t, const mpq_class& c0) {
    if (t.S < 2) throw InvalidParameters("abc: kernel must be >= 2");
    RefinementCheck out;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), t.s);
    Real log_s = log(Real(mpq_class(t.S)));
    Real pow_term = log_s;
    for (unsigned i = 1; i < t.s; ++i) pow_term = pow_term * log_s;
    if (t.s == 0) pow_term = Real(1);
    out.rhs = Real(c0) * Real(mpq_class(t.S)) * pow_term / Real(mpq_class(fact));
    out.slack = out.rhs / Real(mpq_class(t.max_abs));
    Verdict v = compare_greater(Real(mpq_class(t.max_abs)), out.rhs);
    if (v.is_true()) {
        out.holds = Truth::False;  // max > rhs: the refinement fails here
    } else if (v.is_false()) {
        out.holds = Truth::True;
    }
    return out;
}

ScanReport scan_triples(unsigned long max_c, const mpq_class& c0, unsigned parallelism,
                        size_t top) {
    if (max_c < 2) throw InvalidParameters("scan_triples: max_c must be >= 2");
    if (max_c > 2000000) {
        throw InvalidParameters("scan_triples: sieve beyond 2e6 not supported");
    }
    if (parallelism == 0) parallelism = default_parallelism();

    // Smallest-prime-factor sieve -> radical and omega tables.
    std::vector<uint32_t> spf(max_c + 1, 0);
    for (uint32_t i = 2; i <= max_c; ++i) {
        if (spf[i] == 0) {
            for (uint64_t j = i; j <= max_c; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    std::vector<uint64_t> rad(max_c + 1, 1);
    std::vector<uint8_t> omega(max_c + 1, 0);
    for (uint32_t i = 2; i <= max_c; ++i) {
        uint32_t n = i, last = 0;
        uint64_t r = 1;
        uint8_t w = 0;
        while (n > 1) {
            uint32_t p = spf[n];
            if (p != last) {
                r *= p;
                ++w;
                last = p;
            }
            n /= p;
        }
        rad[i] = r;
        omega[i] = w;
    }

    ScanReport rep;
    rep.max_c = max_c;
    rep.c0 = c0;
    const double c0d = mpq_get_d(c0.get_mpq_t());

    struct Hit {
        ScanEntry entry;
        bool failure;
    };
    auto hits = parallel_chunks<Hit>(
        2, static_cast<long long>(max_c) + 1, parallelism,
        [&](long long lo, long long hi, std::vector<Hit>& out) {
            std::vector<double> logfact(64, 0.0);
            for (size_t i = 2; i < logfact.size(); ++i) {
                logfact[i] = logfact[i - 1] + std::log(double(i));
            }
            for (long long c = lo; c < hi; ++c) {
                for (unsigned long a = 1; 2 * a <= static_cast<unsigned long>(c); ++a) {
                    unsigned long b = c - a;
                    if (std::gcd(a, static_cast<unsigned long>(c)) != 1) continue;
                    // coprime by construction: gcd(a, b) = gcd(a, c)
                    uint64_t S64 = rad[a] * rad[b] * rad[c];
                    unsigned s = omega[a] + omega[b] + omega[c];
                    double logS = std::log(double(S64));
                    double q = std::log(double(c)) / logS;
                    ScanEntry e{a, b, static_cast<unsigned long>(c), S64, s, q};
                    bool fail_candidate =
                        std::log(double(c)) >
                        std::log(c0d) + logS + s * std::log(logS) - logfact[s] - 1e-9;
                    if (q > 1.0 - 1e-9 || fail_candidate) out.push_back({e, fail_candidate});
                }
            }
        });

    // #\{a <= c/2, gcd(a, c) = 1\} = ceil(phi(c)/2); phi from the sieve.
    uint64_t total = 0;
    {
        std::vector<uint32_t> phi(max_c + 1);
        for (uint32_t i = 0; i <= max_c; ++i) phi[i] = i;
        for (uint32_t i = 2; i <= max_c; ++i) {
            if (spf[i] == i) {  // prime
                for (uint64_t j = i; j <= max_c; j += i) phi[j] -= phi[j] / i;
            }
        }
        for (unsigned long c = 2; c <= max_c; ++c) total += (phi[c] + 1) / 2;
    }
    rep.triples = total;

    std::vector<ScanEntry> quality;
    for (const auto& h : hits) {
        quality.push_back(h.entry);
        if (h.failure) {
            // certified recheck before reporting
            AbcTriple t = analyze_triple(mpz_class(h.entry.a), mpz_class(h.entry.b),
                                         -mpz_class(static_cast<long>(h.entry.c)));
            if (check_baker_refinement(t, c0).holds == Truth::False) {
                rep.refinement_failures.push_back(h.entry);
            }
        }
    }
    std::sort(quality.begin(), quality.end(), [](const ScanEntry& x, const ScanEntry& y) {
        if (x.quality != y.quality) return x.quality > y.quality;
        if (x.c != y.c) return x.c < y.c;
        return x.a < y.a;
    });
    if (quality.size() > top) quality.resize(top);
    rep.top_quality = std::move(quality);
    std::sort(rep.refinement_failures.begin(), rep.refinement_failures.end(),
              [](const ScanEntry& x, const ScanEntry& y) {
                  return x.c < y.c || (x.c == y.c && x.a < y.a);
              });
    return rep;
}

}  // namespace abc
}  // namespace dioph
