#include "dioph/reduction/reduction.hpp"

#include "dioph/contfrac/contfrac.hpp"
#include "dioph/errors.hpp"

namespace dioph {
namespace reduction {

namespace {

// Refines x until the enclosure decides x < thr (True) or x > thr (False),
// keeping the refined value so its enclosure witnesses the verdict.
struct ThresholdCheck {
    Truth below = Truth::Unknown;
    Real refined;
};

ThresholdCheck check_below(Real x, const mpq_class& thr, mpfr_prec_t max_prec) {
    if (x.exact()) {
        return {*x.exact() < thr ? Truth::True : Truth::False, x};
    }
    for (;;) {
        if (x.enc().certainly_lt(thr)) return {Truth::True, x};
        if (x.enc().certainly_gt(thr)) return {Truth::False, x};
        if (x.evaluated_prec() >= max_prec) return {Truth::Unknown, x};
        x = x.refined(std::min(max_prec, x.evaluated_prec() * 2));
    }
}

mpz_class ceil_pow10(const mpq_class& log10_value) {
    if (log10_value.get_den() == 1) {
        if (log10_value < 0) return 1;
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, mpz_get_ui(log10_value.get_num_mpz_t()));
        return r;
    }
    // ceil(10^(p/q)) via a certified enclosure of root(10^p, q).
    mpz_class p = log10_value.get_num(), q = log10_value.get_den();
    if (p < 0) return 1;
    ExprPtr e = Expr::root(Expr::pow_int(Expr::constant(10), mpz_get_si(p.get_mpz_t())),
                           mpz_get_ui(q.get_mpz_t()));
    return certified_ceil(Real(e));
}

// Smallest integer t with 10^t >= n  (n >= 1).
mpq_class digits_log10(const mpz_class& n) {
    std::string s = n.get_str();
    size_t d = s.size();
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, d - 1);
    return pow == n ? mpq_class(static_cast<long>(d - 1)) : mpq_class(static_cast<long>(d));
}

// r <= log(q*K*A)/log(C), rounded up from the upper endpoint.
mpz_class new_bound_from(const mpz_class& q, const mpz_class& K, const mpq_class& mult,
                         const mpq_class& base) {
    mpq_class qka = mpq_class(q * K) * mult;
    Real bound = (log(Real(qka)) / log(Real(base))).refined(256);
    mpz_class nb;
    mpfr_get_z(nb.get_mpz_t(), bound.enc().hi(), MPFR_RNDU);
    return nb < 1 ? mpz_class(1) : nb;
}

struct Internals {
    mpz_class R;        // integer bound on r
    mpq_class r_log10;  // exact log10-scale bound with 10^r_log10 >= R
};

std::optional<ReductionCertificate> try_candidate(const ReductionProblem& prob,
                                                  const mpz_class& K, const Internals& in,
                                                  const cf::Convergent& conv,
                                                  mpfr_prec_t max_prec, std::string& detail) {
    const mpz_class M = K * in.R;
    mpq_class thr_theta(1, 1);
    thr_theta /= M;
    mpq_class thr_phi(2, 1);
    thr_phi /= K;

    Real q_real{mpq_class(conv.q)};
    auto t = check_below(nearest_integer_distance(q_real * prob.theta), thr_theta, max_prec);
    if (t.below != Truth::True) {
        detail = "||q*theta|| <= 1/(K*R) not certified for q=" + conv.q.get_str();
        return std::nullopt;
    }
    auto u = check_below(nearest_integer_distance(q_real * prob.phi), thr_phi, max_prec);
    if (u.below != Truth::False) {
        detail = "||q*phi|| >= 2/K not certified for q=" + conv.q.get_str();
        return std::nullopt;
    }

    ReductionCertificate cert;
    cert.q = conv.q;
    cert.q_theta_dist = t.refined.enc();
    cert.q_phi_dist = u.refined.enc();
    cert.K = K;
    cert.old_bound_log10 = in.r_log10;
    cert.new_bound = new_bound_from(conv.q, K, prob.mult, prob.base);
    return cert;
}

ReduceOutcome reduce_once_impl(const ReductionProblem& prob, const mpz_class& K,
                               const Internals& in, unsigned candidates,
                               mpfr_prec_t max_prec) {
    if (K < 2) throw InvalidParameters("reduce: K must be >= 2");
    if (max_prec == 0) max_prec = default_precision_ceiling();
    const mpz_class M = K * in.R;

    // Convergent denominators from the largest q <= M onward; any q with a
    // certified ||q*theta|| <= 1/M works, later ones only enlarge new_bound
    // through log q.
    auto ladder = cf::convergents_while(prob.theta, M, max_prec);
    size_t have = ladder.size();
    size_t want = have + candidates;
    size_t count = std::max<size_t>(16, want + 4);
    cf::ContinuedFraction full;
    for (;;) {
        full = cf::expand(prob.theta, count, max_prec);
        if (full.terminated) throw InvalidParameters("reduce: theta must be irrational");
        if (full.convergents.size() >= want) break;
        count *= 2;
    }

    ReduceOutcome out;
    std::string detail;
    size_t first = have == 0 ? 0 : have - 1;  // largest q <= M, then successors
    for (size_t i = first; i < first + candidates && i < full.convergents.size(); ++i) {
        auto cert = try_candidate(prob, K, in, full.convergents[i], max_prec, detail);
        if (cert) {
            out.status = ReduceStatus::Success;
            out.certificate = std::move(*cert);
            return out;
        }
    }
    out.status = ReduceStatus::SmallQPhi;
    out.detail = detail;
    return out;
}

}  // namespace

void ReductionProblem::validate() const {
    if (mult < 1) throw InvalidParameters("reduce: multiplier A must be >= 1");
    if (base <= 1) throw InvalidParameters("reduce: base C must be > 1");
    if (bound_log10 < 0) throw InvalidParameters("reduce: bound must be >= 1");
    if (bound_log10 > 100000) {
        throw InvalidParameters("reduce: bound beyond 10^100000 is not enumerable");
    }
}

mpz_class ReductionProblem::bound_integer() const { return ceil_pow10(bound_log10); }

ReduceOutcome reduce_once(const ReductionProblem& prob, const mpz_class& K,
                          mpfr_prec_t max_prec) {
    prob.validate();
    Internals in{prob.bound_integer(), prob.bound_log10};
    return reduce_once_impl(prob, K, in, 3, max_prec);
}

FixpointResult reduce_to_fixpoint(const ReductionProblem& prob, const KPolicy& policy,
                                  mpfr_prec_t max_prec) {
    prob.validate();
    FixpointResult res;
    Internals in{prob.bound_integer(), prob.bound_log10};
    mpz_class prev_new_bound = -1;
    for (unsigned round = 0; round < 64; ++round) {
        std::optional<ReductionCertificate> got;
        std::string last_detail;
        mpz_class K = policy.k0;
        for (unsigned e = 0; e < policy.escalations; ++e, K *= 10) {
            ReduceOutcome out =
                reduce_once_impl(prob, K, in, policy.convergents_per_k, max_prec);
            if (out.status == ReduceStatus::Success) {
                got = std::move(out.certificate);
                break;
            }
            last_detail = out.detail;
        }
        if (!got) {
            throw Stalled("reduction stalled: " + last_detail);
        }
        mpz_class nb = got->new_bound;
        bool progress = (prev_new_bound < 0 && nb < in.R) ||
                        (prev_new_bound >= 0 && nb < prev_new_bound);
        if (!progress) break;
        res.chain.push_back(std::move(*got));
        res.final_bound = nb;
        prev_new_bound = nb;
        in.r_log10 = digits_log10(nb);
        in.R = ceil_pow10(in.r_log10);
    }
    if (res.chain.empty()) {
        // Input bound was already at (or below) what one round could give.
        res.final_bound = in.R;
    }
    return res;
}

bool verify_certificate(const ReductionProblem& prob, const ReductionCertificate& cert,
                        std::string* why, mpfr_prec_t max_prec) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (max_prec == 0) max_prec = default_precision_ceiling();
    mpz_class R = ceil_pow10(cert.old_bound_log10);
    mpz_class M = cert.K * R;
    mpq_class thr_theta(1, 1);
    thr_theta /= M;
    mpq_class thr_phi(2, 1);
    thr_phi /= cert.K;

    // The stored enclosures must themselves witness the inequalities.
    if (!cert.q_theta_dist.certainly_le(thr_theta)) {
        return fail("stored ||q*theta|| enclosure does not witness <= 1/(K*R)");
    }
    if (!cert.q_phi_dist.certainly_ge(thr_phi)) {
        return fail("stored ||q*phi|| enclosure does not witness >= 2/K");
    }

    // Fresh arithmetic must reproduce the verdicts, and the fresh enclosures
    // must be consistent with the stored ones.
    Real q_real{mpq_class(cert.q)};
    auto t = check_below(nearest_integer_distance(q_real * prob.theta), thr_theta, max_prec);
    if (t.below != Truth::True) return fail("fresh ||q*theta|| fails <= 1/(K*R)");
    auto u = check_below(nearest_integer_distance(q_real * prob.phi), thr_phi, max_prec);
    if (u.below != Truth::False) return fail("fresh ||q*phi|| fails >= 2/K");
    try {
        t.refined.enc().intersect(cert.q_theta_dist);
        u.refined.enc().intersect(cert.q_phi_dist);
    } catch (const std::logic_error&) {
        return fail("stored enclosure is disjoint from the fresh one");
    }

    if (new_bound_from(cert.q, cert.K, prob.mult, prob.base) > cert.new_bound) {
        return fail("stored new_bound is smaller than the recomputed one");
    }
    return true;
}

}  // namespace reduction
}  // namespace dioph
