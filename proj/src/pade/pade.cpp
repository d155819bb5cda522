#include "dioph/pade/pade.hpp"

#include <algorithm>

#include "dioph/errors.hpp"
#include "dioph/support/ratlinalg.hpp"

namespace dioph {
namespace pade {

std::vector<mpq_class> cuberoot_series(unsigned n) {
    std::vector<mpq_class> c(n + 1);
    c[0] = 1;
    mpq_class binom = 1;  // binom(1/3, i)
    for (unsigned i = 1; i <= n; ++i) {
        binom *= (mpq_class(1, 3) - mpq_class(i) + 1) / mpq_class(i);
        c[i] = (i % 2 == 0) ? binom : -binom;
    }
    return c;
}

namespace {

std::vector<mpq_class> truncated_product(const std::vector<mpq_class>& b, unsigned r) {
    auto series = cuberoot_series(r);
    std::vector<mpq_class> a(r + 1, 0);
    for (unsigned i = 0; i <= r; ++i) {
        for (unsigned j = 0; i + j <= r && j < b.size(); ++j) {
            a[i + j] += b[j] * series[i];
        }
    }
    return a;
}

}  // namespace

PadePair pade_coefficients(unsigned r) {
    PadePair out;
    out.r = r;
    out.b.assign(r + 1, 0);
    out.b[0] = 1;
    mpq_class term = 1;
    for (unsigned j = 1; j <= r; ++j) {
        long k = static_cast<long>(j) - 1;
        mpq_class num = (mpq_class(1, 3) - mpq_class(static_cast<long>(r)) + k) *
                        mpq_class(k - static_cast<long>(r));
        mpq_class den = mpq_class(1 + k) * mpq_class(k - 2 * static_cast<long>(r));
        term *= num / den;
        out.b[j] = term;
    }
    out.a = truncated_product(out.b, r);
    return out;
}

PadePair pade_coefficients_linalg(unsigned r) {
    PadePair out;
    out.r = r;
    out.b.assign(r + 1, 0);
    out.b[0] = 1;
    if (r > 0) {
        // Kill coefficients r+1..2r of B(x)(1-x)^(1/3):
        //   sum_{k=1..r} c_{r+j-k} b_k = -c_{r+j},  j = 1..r
        auto c = cuberoot_series(2 * r);
        RatMatrix m(r, RatVector(r));
        RatVector rhs(r);
        for (unsigned j = 1; j <= r; ++j) {
            for (unsigned k = 1; k <= r; ++k) m[j - 1][k - 1] = c[r + j - k];
            rhs[j - 1] = -c[r + j];
        }
        RatVector x = solve_linear(std::move(m), std::move(rhs));
        for (unsigned k = 1; k <= r; ++k) out.b[k] = x[k - 1];
    }
    out.a = truncated_product(out.b, r);
    return out;
}

std::vector<mpq_class> approximants_to_cube_root2(unsigned count) {
    if (count == 0) throw InvalidParameters("approximants: count must be >= 1");
    std::vector<mpq_class> out;
    const mpq_class x0(3, 128);
    for (unsigned r = 0; r < count; ++r) {
        PadePair p = pade_coefficients(r);
        mpq_class bv = 0, av = 0;
        for (size_t i = p.b.size(); i-- > 0;) bv = bv * x0 + p.b[i];
        for (size_t i = p.a.size(); i-- > 0;) av = av * x0 + p.a[i];
        mpq_class w = mpq_class(5, 4) * bv / av;
        w.canonicalize();
        out.push_back(w);
    }
    return out;
}

MeasureCheck verify_effective_measure(const Real& alpha, const mpq_class& c,
                                      const mpq_class& kappa, const mpz_class& q_max,
                                      mpfr_prec_t max_prec) {
    if (q_max < 1) throw InvalidParameters("verify_effective_measure: q_max must be >= 1");
    if (c <= 0 || kappa <= 0) throw InvalidParameters("verify_effective_measure: c, kappa > 0");
    MeasureCheck res;
    auto convs = cf::convergents_while(alpha, q_max, max_prec);
    res.convergents_checked = convs.size();
    if (convs.empty()) {
        res.holds = Truth::True;
        return res;
    }
    const Real log10_c = log10(Real(c));
    bool have_worst = false;
    Real worst_slack;
    for (const auto& conv : convs) {
        mpq_class pq(conv.p, conv.q);
        pq.canonicalize();
        if (alpha.exact() && *alpha.exact() == pq) {
            // exact hit: |alpha - p/q| = 0 <= c/q^kappa
            res.holds = Truth::False;
            res.worst = conv;
            res.slack_log10_lower = 0;
            return res;
        }
        // slack = log10(|alpha - p/q| q^kappa / c)
        Real slack = log10(abs(alpha - Real(pq))) +
                     Real(kappa) * log10(Real(mpq_class(conv.q))) - log10_c;
        Verdict v = compare_greater(slack, Real(0), max_prec);
        if (!v.is_true()) {
            res.holds = v.is_false() ? Truth::False : Truth::Unknown;
            res.worst = conv;
            res.slack_log10_lower = slack.refined(256).enc().lo_finite()
                                        ? slack.refined(256).enc().lo_q()
                                        : mpq_class(0);
            return res;
        }
        Real refined = slack.refined(192);
        if (!have_worst ||
            mpfr_less_p(refined.enc().hi(), worst_slack.enc().hi())) {
            worst_slack = refined;
            res.worst = conv;
            have_worst = true;
        }
    }
    res.holds = Truth::True;
    res.slack_log10_lower = worst_slack.enc().lo_q();
    return res;
}

}  // namespace pade
}  // namespace dioph
