#include "dioph/logforms/logforms.hpp"

#include "dioph/errors.hpp"

namespace dioph {
namespace logforms {

namespace {

// Clamp a height up to 4 per the "A >= 4" convention; the note is informative
// only, correctness comes from the max.
Real clamp_height(const Real& a, const char* what, std::vector<std::string>& notes) {
    if (a.enc().certainly_ge(4)) return a;
    notes.push_back(std::string(what) + " below 4 clamped up per formula convention");
    return max(a, Real(4));
}

unsigned clamp_degree(unsigned d, std::vector<std::string>& notes) {
    if (d >= 4) return d;
    notes.push_back("degree bound below 4 clamped up per formula convention");
    return 4;
}

void check_common(const BoundRequest& req) {
    if (req.n < 1) throw InvalidParameters("n must be >= 1");
    if (req.heights.empty()) throw InvalidParameters("at least one height required");
    if (req.heights.size() != 1 && req.heights.size() != req.n) {
        throw InvalidParameters("give one uniform height or one per logarithm");
    }
}

Real max_height(const BoundRequest& req, std::vector<std::string>& notes) {
    Real a = clamp_height(req.heights[0], "height A", notes);
    std::vector<std::string> dummy;
    for (size_t i = 1; i < req.heights.size(); ++i) {
        a = max(a, clamp_height(req.heights[i], "height A", dummy));
    }
    if (!dummy.empty()) notes.push_back(dummy.front());
    return a;
}

// Per-term clamped heights, expanded to n entries.
std::vector<Real> all_heights(const BoundRequest& req, std::vector<std::string>& notes) {
    std::vector<Real> out;
    std::vector<std::string> local;
    for (unsigned i = 0; i < req.n; ++i) {
        const Real& a = req.heights.size() == 1 ? req.heights[0] : req.heights[i];
        out.push_back(clamp_height(a, "height A_i", local));
    }
    if (!local.empty()) notes.push_back(local.front());
    return out;
}

mpz_class clamped_b(const BoundRequest& req, std::vector<std::string>& notes) {
    if (req.coeff_height >= 4) return req.coeff_height;
    notes.push_back("coefficient height B below 4 clamped up per formula convention");
    return 4;
}

}  // namespace

BoundRequest BoundRequest::uniform(unsigned n, const mpq_class& delta, unsigned d,
                                   const mpz_class& a) {
    BoundRequest req;
    req.n = n;
    req.delta = delta;
    req.degree = d;
    req.heights = {Real(mpq_class(a))};
    return req;
}

BoundResult bound_lf4(const BoundRequest& req) {
    check_common(req);
    if (req.delta <= 0 || req.delta > 1) {
        throw InvalidParameters("delta must satisfy 0 < delta <= 1");
    }
    BoundResult res;
    res.formula = "lf4";
    unsigned d = clamp_degree(req.degree, res.notes);
    Real a = max_height(req, res.notes);
    // (2n+1)^2 * [ n^2 log10(4) + log10(1/delta) + 2n log10(d) + log10(ln A) ]
    long n = req.n;
    mpq_class inv_delta = mpq_class(1) / req.delta;
    Real inner = Real(n * n) * log10(Real(4)) + log10(Real(inv_delta)) +
                 Real(2 * n) * log10(Real(long(d))) + log10(log(a));
    res.log10_bound = Real((2 * n + 1) * (2 * n + 1)) * inner;
    return res;
}

BoundResult bound_dependence_relation(const BoundRequest& req) {
    check_common(req);
    if (req.n < 2) throw InvalidParameters("a dependence relation needs n >= 2");
    BoundRequest r = req;
    r.delta = 1;
    BoundResult res = bound_lf4(r);
    res.formula = "rel";
    return res;
}

namespace {

// Omega = prod ln A_i and Omega' = Omega / ln A_n for clamped heights.
void omega_terms(const std::vector<Real>& heights, Real& omega, Real& omega_prime) {
    omega = log(heights[0]);
    for (size_t i = 1; i < heights.size(); ++i) omega = omega * log(heights[i]);
    omega_prime = omega / log(heights.back());
}

}  // namespace

BoundResult bound_sharp77(const BoundRequest& req, bool inhomogeneous) {
    check_common(req);
    if (req.field_degree < 1) throw InvalidParameters("field degree D must be >= 1");
    BoundResult res;
    res.formula = inhomogeneous ? "sharp77" : "sharp77-rational";
    auto heights = all_heights(req, res.notes);
    mpz_class b = clamped_b(req, res.notes);
    Real omega, omega_prime;
    omega_terms(heights, omega, omega_prime);
    if (req.n == 1 || !compare_greater(omega_prime, Real(1)).is_true()) {
        throw InvalidParameters("log Omega' is nonpositive (Omega' <= 1); formula not applicable");
    }
    mpz_class c0_base = 16 * mpz_class(req.n) * mpz_class(req.field_degree);
    mpz_class c0;
    mpz_pow_ui(c0.get_mpz_t(), c0_base.get_mpz_t(), 200 * req.n);
    Real factor = inhomogeneous ? log10(Real(mpq_class(b)) * omega) : log10(Real(mpq_class(b)));
    res.log10_bound = Real(mpq_class(c0)) * omega * log(omega_prime) * factor;
    return res;
}

BoundResult bound_bw93(const BoundRequest& req) {
    check_common(req);
    if (req.field_degree < 1) throw InvalidParameters("field degree D must be >= 1");
    BoundResult res;
    res.formula = "bw93";
    auto heights = all_heights(req, res.notes);
    mpz_class b = clamped_b(req, res.notes);
    Real omega, omega_prime;
    omega_terms(heights, omega, omega_prime);
    mpz_class c1_base = 16 * mpz_class(req.n) * mpz_class(req.field_degree);
    mpz_class c1;
    mpz_pow_ui(c1.get_mpz_t(), c1_base.get_mpz_t(), 2 * req.n + 4);
    res.log10_bound = Real(mpq_class(c1)) * omega * log10(Real(mpq_class(b)));
    return res;
}

BoundResult bound_mordell(const mpz_class& k) {
    if (k == 0) throw InvalidParameters("Mordell bound needs k != 0");
    BoundResult res;
    res.formula = "mordell";
    res.double_log = true;
    // X = (10^10 |k|)^10000; bound = exp(X) <= 10^X, report log10(X).
    mpz_class base = ::abs(k);
    mpz_class tenten;
    mpz_ui_pow_ui(tenten.get_mpz_t(), 10, 10);
    base *= tenten;
    res.log10_bound = Real(10000) * log10(Real(mpq_class(base)));
    return res;
}

BoundResult bound_thue_cubic(const mpz_class& m) {
    if (m == 0) throw InvalidParameters("Thue bound needs m != 0");
    BoundResult res;
    res.formula = "thue-cubic";
    res.log10_bound = Real(23) * log10(Real(mpq_class(::abs(m) * 300000)));
    return res;
}

}  // namespace logforms
}  // namespace dioph
