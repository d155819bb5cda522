#include "dioph/support/factor.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

constexpr uint32_t kTrialLimit = 1'000'000;

const std::vector<uint32_t>& small_primes() {
    static std::vector<uint32_t> primes = [] {
        std::vector<bool> comp(kTrialLimit + 1, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (!comp[i]) {
                ps.push_back(i);
                for (uint64_t j = uint64_t(i) * i; j <= kTrialLimit; j += i) comp[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Pollard-Brent rho; returns a nontrivial factor of composite odd n.
uint64_t pollard_brent(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        uint64_t saved_x = x;
        for (uint64_t lam = 1; d == 1; lam <<= 1) {
            saved_x = x = y;
            uint64_t prod = 1;
            uint64_t i = 0;
            while (i < lam && d == 1) {
                uint64_t chunk = std::min<uint64_t>(128, lam - i);
                for (uint64_t j = 0; j < chunk; ++j) {
                    y = f(y);
                    prod = mulmod(prod, x > y ? x - y : y - x, n);
                }
                d = std::gcd(prod, n);
                i += chunk;
            }
            if (d == n) {
                // backtrack one by one
                d = 1;
                y = saved_x;
                while (d == 1) {
                    y = f(y);
                    d = std::gcd(x > y ? x - y : y - x, n);
                }
                break;
            }
        }
        if (d != n && d != 1) return d;
    }
}

void factor_u64(uint64_t n, std::vector<std::pair<uint64_t, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1);
        return;
    }
    uint64_t d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(const mpz_class& n) {
    if (n == 0) throw InvalidParameters("factorize(0)");
    mpz_class m = ::abs(n);
    std::vector<PrimePower> out;
    for (uint32_t p : small_primes()) {
        if (m == 1) break;
        if (mpz_cmp_ui(m.get_mpz_t(), uint64_t(p) * p) < 0) break;  // m is prime or 1
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            out.push_back({mpz_class(p), e});
        }
    }
    if (m > 1) {
        if (!m.fits_ulong_p() && mpz_sizeinbase(m.get_mpz_t(), 2) > 64) {
            throw FactorizationTooHard("cofactor " + m.get_str() +
                                       " exceeds the deterministic 2^64 range");
        }
        uint64_t v = mpz_get_ui(m.get_mpz_t());
        // mpz_get_ui truncates; reconstruct exactly for 64-bit values.
        if (mpz_sizeinbase(m.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
            throw FactorizationTooHard("cofactor exceeds native word size");
        }
        std::vector<std::pair<uint64_t, unsigned>> fs;
        factor_u64(v, fs);
        std::sort(fs.begin(), fs.end());
        for (size_t i = 0; i < fs.size();) {
            size_t j = i;
            unsigned e = 0;
            while (j < fs.size() && fs[j].first == fs[i].first) {
                e += fs[j].second;
                ++j;
            }
            out.push_back({mpz_class(static_cast<unsigned long>(fs[i].first)), e});
            i = j;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return out;
}

mpz_class radical(const std::vector<PrimePower>& f) {
    mpz_class r = 1;
    for (const auto& pp : f) r *= pp.p;
    return r;
}

}  // namespace dioph
