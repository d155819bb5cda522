#include "dioph/contfrac/contfrac.hpp"

#include "dioph/errors.hpp"

namespace dioph {
namespace cf {

namespace {

void push_quotient(ContinuedFraction& cf, const mpz_class& a) {
    size_t n = cf.convergents.size();
    mpz_class p, q;
    if (n == 0) {
        p = a;
        q = 1;
    } else if (n == 1) {
        p = a * cf.convergents[0].p + 1;
        q = a;
    } else {
        p = a * cf.convergents[n - 1].p + cf.convergents[n - 2].p;
        q = a * cf.convergents[n - 1].q + cf.convergents[n - 2].q;
    }
    cf.quotients.push_back(a);
    cf.convergents.push_back({p, q});
}

}  // namespace

ContinuedFraction expand(const mpq_class& x, size_t count) {
    if (count == 0) throw InvalidParameters("expand: count must be >= 1");
    ContinuedFraction cf;
    mpz_class num = x.get_num(), den = x.get_den();
    while (cf.quotients.size() < count) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        push_quotient(cf, a);
        if (r == 0) {
            cf.terminated = true;
            break;
        }
        num = den;
        den = r;
    }
    return cf;
}

ContinuedFraction expand(const Real& x, size_t count, mpfr_prec_t max_prec) {
    if (count == 0) throw InvalidParameters("expand: count must be >= 1");
    if (x.exact()) return expand(*x.exact(), count);
    if (max_prec == 0) max_prec = default_precision_ceiling();
    mpfr_prec_t prec = std::max<mpfr_prec_t>(kStartPrecision, x.evaluated_prec());
    for (;;) {
        Evaluator ev(prec);
        Interval iv = ev.eval(x.expr());
        ContinuedFraction cf;
        while (cf.quotients.size() < count) {
            auto a = iv.certain_floor();
            if (!a) break;  // ambiguous at this precision
            push_quotient(cf, *a);
            Interval frac = Interval::sub(iv, Interval::from_integer(*a, prec), prec);
            if (!frac.certainly_gt(0)) break;  // next quotient not certifiable
            iv = Interval::div(Interval::from_integer(1, prec), frac, prec);
        }
        if (cf.quotients.size() >= count) return cf;
        if (prec >= max_prec) {
            throw PrecisionExhausted("continued fraction quotient not certifiable");
        }
        prec = std::min(max_prec, prec * 2);
    }
}

std::vector<Convergent> convergents_while(const Real& xi, const mpz_class& q_limit,
                                          mpfr_prec_t max_prec) {
    // Expand in growing batches until a convergent denominator passes the
    // limit; q_i grows at least like Fibonacci, so batches stay small.
    size_t count = 16;
    for (;;) {
        ContinuedFraction cf;
        try {
            cf = expand(xi, count, max_prec);
        } catch (const PrecisionExhausted&) {
            throw;
        }
        if (cf.terminated || cf.convergents.back().q > q_limit) {
            std::vector<Convergent> out;
            for (const auto& c : cf.convergents) {
                if (c.q > q_limit) break;
                out.push_back(c);
            }
            return out;
        }
        count *= 2;
    }
}

Convergent dirichlet_approx(const Real& xi, const mpz_class& Q, mpfr_prec_t max_prec) {
    if (Q < 1) throw InvalidParameters("dirichlet_approx: Q must be >= 1");
    // Exact rational with denominator <= Q: the value itself, error 0.
    if (xi.exact() && xi.exact()->get_den() <= Q) {
        return {mpz_class(xi.exact()->get_num()), mpz_class(xi.exact()->get_den())};
    }
    auto convs = convergents_while(xi, Q, max_prec);
    if (convs.empty()) throw PrecisionExhausted("no convergent below the Dirichlet limit");
    // The largest q_i <= Q has |q_i xi - p_i| < 1/q_{i+1} <= 1/(Q+1).
    return convs.back();
}

std::vector<Convergent> convergents_up_to(const Real& xi, unsigned q_max_log10,
                                          mpfr_prec_t max_prec) {
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, q_max_log10);
    return convergents_while(xi, limit, max_prec);
}

}  // namespace cf
}  // namespace dioph
