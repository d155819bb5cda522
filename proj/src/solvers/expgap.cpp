#include "dioph/solvers/expgap.hpp"

#include <algorithm>

#include "dioph/contfrac/contfrac.hpp"
#include "dioph/errors.hpp"
#include "dioph/logforms/logforms.hpp"
#include "dioph/support/factor.hpp"

namespace dioph {
namespace solvers {

namespace {

// a, b multiplicatively dependent iff their prime exponent vectors are
// proportional.
bool multiplicatively_dependent(const mpz_class& a, const mpz_class& b) {
    auto fa = factorize(a);
    auto fb = factorize(b);
    if (fa.size() != fb.size()) return false;
    for (size_t i = 0; i < fa.size(); ++i) {
        if (fa[i].p != fb[i].p) return false;
    }
    for (size_t i = 1; i < fa.size(); ++i) {
        if (mpz_class(fa[i].e) * fb[0].e != mpz_class(fb[i].e) * fa[0].e) return false;
    }
    return true;
}

mpq_class rational_delta_below(const Real& x) {
    // largest k/100 <= x, clamped into (0, 1]
    mpz_class k = certified_floor(Real(100) * x);
    if (k > 100) k = 100;
    if (k < 1) throw InvalidParameters("expgap: bases too small for a positive decay rate");
    return mpq_class(k, 100);
}

}  // namespace

std::vector<std::pair<unsigned long, unsigned long>> expgap_brute_force(const mpz_class& a,
                                                                        const mpz_class& b,
                                                                        const mpz_class& m,
                                                                        unsigned long cap) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    std::vector<mpz_class> bpow(cap + 1);
    bpow[0] = 1;
    for (unsigned long s = 1; s <= cap; ++s) bpow[s] = bpow[s - 1] * b;
    mpz_class apow = 1;
    for (unsigned long r = 1; r <= cap; ++r) {
        apow *= a;
        mpz_class want = apow - m;  // b^s must equal this
        if (want < b) continue;
        // binary search in the power table
        auto it = std::lower_bound(bpow.begin() + 1, bpow.end(), want);
        if (it != bpow.end() && *it == want) {
            out.emplace_back(r, static_cast<unsigned long>(it - bpow.begin()));
        }
    }
    return out;
}

ExpGapResult solve_exponential_gap(const mpz_class& a, const mpz_class& b, const mpz_class& m) {
    if (a < 2 || b < 2) throw InvalidParameters("expgap: bases must be >= 2");
    if (m == 0) throw InvalidParameters("expgap: m must be nonzero");
    if (multiplicatively_dependent(a, b)) {
        throw MultiplicativelyDependent("expgap: " + a.get_str() + " and " + b.get_str() +
                                        " are multiplicatively dependent");
    }

    ExpGapResult res;
    res.a = a;
    res.b = b;
    res.m = m;

    const mpz_class abs_m = ::abs(m);
    const Real ln_a = log(Real(mpq_class(a)));
    const Real ln_b = log(Real(mpq_class(b)));
    const Real ln_min = a < b ? ln_a : ln_b;

    // Solutions with max(r,s) large satisfy 0 < |r ln a - s ln b| < e^{-delta H}
    // for any rational delta below min(1, ln(min(a,b))/2); the explicit
    // four-logarithm bound then caps H.
    mpq_class delta = rational_delta_below(ln_min / Real(2));
    res.certificate.delta = delta;
    mpz_class height = a > b ? a : b;
    auto baker = logforms::bound_lf4(logforms::BoundRequest::uniform(2, delta, 4, height));
    mpz_class t = certified_ceil(baker.log10_bound);
    res.certificate.baker_bound_log10 = mpq_class(t);
    mpz_class R;
    mpz_ui_pow_ui(R.get_mpz_t(), 10, mpz_get_ui(t.get_mpz_t()));

    // s1 = ceil(log_b(8 |m| R / ln b)): for s > s1 the form is below
    // 1/(4 R b), clearing both the small-|m/b^s| zone and the Legendre
    // precondition with a factor-2 margin.
    Real s1_real = log(Real(mpq_class(8 * abs_m) * mpq_class(R)) / ln_b) / ln_b;
    unsigned long s1 = mpz_get_ui(certified_ceil(s1_real).get_mpz_t());
    s1 = std::max<unsigned long>(s1, 20);
    // Any solution with s <= s1 has a^r <= b^{s1} + |m| <= 2 b^{s1}.
    Real r1_real = (Real(static_cast<long>(s1)) * ln_b + log(Real(2))) / ln_a;
    unsigned long r1 = mpz_get_ui(certified_ceil(r1_real).get_mpz_t()) + 1;
    r1 = std::max<unsigned long>(r1, 20);
    res.certificate.s1 = s1;
    res.certificate.r1 = r1;

    // Exact search over the rectangle.
    {
        std::vector<mpz_class> bpow(s1 + 1);
        bpow[0] = 1;
        for (unsigned long s = 1; s <= s1; ++s) bpow[s] = bpow[s - 1] * b;
        mpz_class apow = 1;
        for (unsigned long r = 1; r <= r1; ++r) {
            apow *= a;
            mpz_class want = apow - m;
            auto it = std::lower_bound(bpow.begin() + 1, bpow.end(), want);
            if (it != bpow.end() && *it == want) {
                res.solutions.emplace_back(r, static_cast<unsigned long>(it - bpow.begin()));
            }
        }
    }

    // Convergent sweep: a solution with s > s1 has s/r = c p_i / (c q_i) for
    // a convergent p_i/q_i of theta = ln a/ln b with q_i < R, and
    //   c ||q_i theta|| <= |Lambda|/ln b < 2|m| b^{-(s1+1)} / ln b.
    // Refuting the c = 1 case refutes every c (left side grows, right side
    // is already maximal).
    Real theta = ln_a / ln_b;
    mpq_class thr;  // 2|m| / (ln b * b^(s1+1)) as an upper rational bound
    {
        mpz_class bpow;
        mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), s1 + 1);
        Real thr_real = Real(mpq_class(2 * abs_m)) / (ln_b * Real(mpq_class(bpow)));
        thr = thr_real.refined_to_width(mpq_class(1, 1000000) / mpq_class(bpow)).enc().hi_q();
    }
    auto convs = cf::convergents_while(theta, R);
    for (const auto& c : convs) {
        if (c.p == 0) continue;  // s = 0 never in the s > s1 region
        Real dist = nearest_integer_distance(Real(mpq_class(c.q)) * theta);
        Verdict v = compare_greater(dist, Real(thr));
        if (v.is_true()) {
            ++res.certificate.convergents_refuted;
            continue;
        }
        // Candidates from this convergent are confined to s <= s*(i); test
        // them individually (exactly where materialisable).
        mpq_class dist_lo = dist.refined_to_width(thr / 4).enc().lo_q();
        if (dist_lo <= 0) throw PrecisionExhausted("expgap: convergent distance not separated");
        Real sstar_real = log(Real(mpq_class(2 * abs_m)) / (ln_b * Real(dist_lo))) / ln_b;
        mpz_class sstar = certified_ceil(sstar_real);
        for (mpz_class cc = 1; cc * c.p <= sstar; ++cc) {
            mpz_class s_cand = cc * c.p;
            mpz_class r_cand = cc * c.q;
            if (s_cand <= static_cast<long>(s1)) continue;  // already searched
            if (s_cand > 100000) {
                throw PrecisionExhausted("expgap: unrefutable candidate beyond exact range");
            }
            res.certificate.fallback_candidates.emplace_back(r_cand.get_str(), s_cand.get_str());
            mpz_class apow, bpow;
            mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), mpz_get_ui(r_cand.get_mpz_t()));
            mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), mpz_get_ui(s_cand.get_mpz_t()));
            if (apow - bpow == m) {
                res.solutions.emplace_back(mpz_get_ui(r_cand.get_mpz_t()),
                                           mpz_get_ui(s_cand.get_mpz_t()));
            }
        }
    }

    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

}  // namespace solvers
}  // namespace dioph
