#include <doctest.h>

#include "dioph/errors.hpp"
#include "dioph/reduction/reduction.hpp"

using namespace dioph;
using namespace dioph::reduction;

namespace {

ReductionProblem golden_instance() {
    ReductionProblem prob;
    prob.theta = (Real(1) + sqrt(Real(5))) / Real(2);
    prob.phi = Real(mpq_class(1, 3));
    prob.mult = 1;
    prob.base = 2;
    prob.bound_log10 = 6;
    return prob;
}

// Exhaustive oracle in scaled integer arithmetic: confirms that no r in
// (from, to] admits an integer s with |r theta - s + phi| < mult * base^-r.
// theta and phi enter as certified 192-bit fixed-point enclosures; the
// accumulated slack of <= r units of 2^-192 is absorbed into the margin.
bool no_solutions_between(const ReductionProblem& prob, long from, long to) {
    const int shift = 192;
    mpz_class one_shifted = mpz_class(1) << shift;
    auto fixed = [&](const Real& x) {
        Real r = x.refined(shift + 64);
        mpq_class scaled = r.enc().lo_q() * one_shifted;
        mpz_class lo;
        mpz_fdiv_q(lo.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        return lo;  // floor(x * 2^shift), within 1 of the truth
    };
    mpz_class th = fixed(prob.theta);
    mpz_class ph = fixed(prob.phi);
    mpz_class acc = th * from + ph;
    for (long r = from; r <= to; ++r) {
        if (r > from) acc += th;
        mpz_class frac = acc & (one_shifted - 1);
        mpz_class dist = std::min(frac, mpz_class(one_shifted - frac));
        // threshold mult * base^-r scaled by 2^shift, plus slack r+2
        mpq_class thr = prob.mult * one_shifted;
        mpq_class basepow = 1;
        if (r < 512) {
            for (long i = 0; i < r; ++i) basepow *= prob.base;
            thr /= basepow;
        } else {
            thr = 0;  // far below one scaled unit
        }
        mpq_class dist_lower = mpq_class(dist) - (r + 2);
        if (dist_lower < thr) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("golden-ratio instance reduces from 10^6 to a two-digit bound") {
    auto prob = golden_instance();
    auto out = reduce_once(prob, 1000);
    REQUIRE(out.status == ReduceStatus::Success);
    const auto& cert = *out.certificate;
    CHECK(cert.new_bound <= 45);
    CHECK(cert.new_bound >= 1);
    CHECK(cert.K == 1000);
    // the certificate's own enclosures witness the two inequalities
    mpz_class R = prob.bound_integer();
    mpq_class thr_theta(1, 1);
    thr_theta /= cert.K * R;
    mpq_class thr_phi(2, 1);
    thr_phi /= cert.K;
    CHECK(cert.q_theta_dist.certainly_le(thr_theta));
    CHECK(cert.q_phi_dist.certainly_ge(thr_phi));

    long nb = mpz_get_si(cert.new_bound.get_mpz_t());
    CHECK(no_solutions_between(prob, nb + 1, 2 * nb));
}

TEST_CASE("certificates replay and reject tampering") {
    auto prob = golden_instance();
    auto out = reduce_once(prob, 1000);
    REQUIRE(out.status == ReduceStatus::Success);
    std::string why;
    CHECK(verify_certificate(prob, *out.certificate, &why));

    auto bad_q = *out.certificate;
    bad_q.q += 1;
    CHECK(!verify_certificate(prob, bad_q, &why));

    auto bad_bound = *out.certificate;
    bad_bound.new_bound -= 5;
    CHECK(!verify_certificate(prob, bad_bound, &why));

    auto bad_k = *out.certificate;
    bad_k.K *= 1000;  // makes 2/K small but 1/(K R) harder: distance fails
    CHECK(!verify_certificate(prob, bad_k, &why));
}

TEST_CASE("homogeneous phi = 0 always fails with SmallQPhi") {
    auto prob = golden_instance();
    prob.phi = Real(0);
    auto out = reduce_once(prob, 1000);
    CHECK(out.status == ReduceStatus::SmallQPhi);
}

TEST_CASE("fixpoint iteration collapses and stops") {
    auto prob = golden_instance();
    auto fix = reduce_to_fixpoint(prob);
    CHECK(fix.final_bound <= 45);
    CHECK(fix.chain.size() >= 2);
    // chain is strictly decreasing
    for (size_t i = 1; i < fix.chain.size(); ++i) {
        CHECK(fix.chain[i].new_bound < fix.chain[i - 1].new_bound);
    }
    for (const auto& cert : fix.chain) {
        ReductionProblem step = prob;
        step.bound_log10 = cert.old_bound_log10;
        CHECK(verify_certificate(step, cert));
    }
}

TEST_CASE("already-small bounds return quickly") {
    auto prob = golden_instance();
    prob.bound_log10 = 2;  // R = 100
    auto fix = reduce_to_fixpoint(prob);
    CHECK(fix.final_bound <= 100);
}

TEST_CASE("new bound is logarithmic in R") {
    auto prob = golden_instance();
    for (long t : {4L, 8L, 12L, 16L, 20L}) {
        prob.bound_log10 = t;
        auto out = reduce_once(prob, 1000);
        REQUIRE(out.status == ReduceStatus::Success);
        // base^nb <= q K A with q within a few convergents of K R: generous
        // envelope nb <= (log10(K^2 A R) + 2)/log10(C) + 2
        double envelope = (6.0 + 2.0 + t) / 0.301 + 2.0;
        CHECK(mpz_get_d(out.certificate->new_bound.get_mpz_t()) <= envelope);
    }
}

TEST_CASE("a second irrational pair reduces and survives the spot oracle") {
    ReductionProblem prob;
    prob.theta = sqrt(Real(7));
    prob.phi = sqrt(Real(3)) / Real(7);
    prob.mult = 2;
    prob.base = mpq_class(5, 2);
    prob.bound_log10 = 50;
    auto fix = reduce_to_fixpoint(prob);
    CHECK(fix.final_bound < 500);
    long nb = mpz_get_si(fix.final_bound.get_mpz_t());
    CHECK(no_solutions_between(prob, nb + 1, 10000));
}

TEST_CASE("parameter validation") {
    auto prob = golden_instance();
    prob.mult = mpq_class(1, 2);
    CHECK_THROWS_AS((void)reduce_once(prob, 1000), InvalidParameters);
    prob = golden_instance();
    prob.base = 1;
    CHECK_THROWS_AS((void)reduce_once(prob, 1000), InvalidParameters);
    prob = golden_instance();
    CHECK_THROWS_AS((void)reduce_once(prob, 1), InvalidParameters);
    prob.theta = Real(mpq_class(22, 7));  // rational theta
    CHECK_THROWS_AS((void)reduce_once(prob, 1000), InvalidParameters);
}
