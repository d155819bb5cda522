#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dioph/numeric/real.hpp"

namespace dioph {
namespace reduction {

// Collapse a huge bound R = 10^bound_log10 on r in
//     |r*theta - s + phi| < mult * base^{-r}      (s ranges over Z)
// to a bound logarithmic in R, using one good denominator q from the
// continued fraction of theta.
struct ReductionProblem {
    Real theta;
    Real phi;
    mpq_class mult = 1;   // A >= 1
    mpq_class base = 2;   // C > 1
    mpq_class bound_log10 = 1;  // R = 10^bound_log10, R >= 1

    void validate() const;
    mpz_class bound_integer() const;  // smallest integer >= 10^bound_log10
};

// The replayable witness of one reduction step.  Soundness: if
// ||q*theta|| <= 1/(K*R) and ||q*phi|| >= 2/K then every r <= R satisfying
// the inequality for some s obeys base^r <= q*K*mult.
struct ReductionCertificate {
    mpz_class q;
    Interval q_theta_dist;  // certified enclosure of ||q*theta||
    Interval q_phi_dist;    // certified enclosure of ||q*phi||
    mpz_class K;
    mpq_class old_bound_log10;
    mpz_class new_bound;
};

enum class ReduceStatus {
    Success,
    SmallQPhi,  // ||q*phi|| < 2/K for the found q (or not certifiable)
};

struct ReduceOutcome {
    ReduceStatus status = ReduceStatus::SmallQPhi;
    std::optional<ReductionCertificate> certificate;
    std::string detail;
};

ReduceOutcome reduce_once(const ReductionProblem& prob, const mpz_class& K,
                          mpfr_prec_t max_prec = 0);

// K-escalation policy: K0, 10*K0, ... each tried with the first
// `convergents_per_k` qualifying convergent denominators.
struct KPolicy {
    mpz_class k0 = 1000;
    unsigned escalations = 12;
    unsigned convergents_per_k = 3;
};

struct FixpointResult {
    mpz_class final_bound;
    std::vector<ReductionCertificate> chain;
};

// Applies reduce_once with R <- new_bound until no further decrease.
// Throws Stalled when no K in the policy succeeds for the current round.
FixpointResult reduce_to_fixpoint(const ReductionProblem& prob, const KPolicy& policy = {},
                                  mpfr_prec_t max_prec = 0);

// Re-checks a stored certificate with fresh interval arithmetic.
bool verify_certificate(const ReductionProblem& prob, const ReductionCertificate& cert,
                        std::string* why = nullptr, mpfr_prec_t max_prec = 0);

}  // namespace reduction
}  // namespace dioph
