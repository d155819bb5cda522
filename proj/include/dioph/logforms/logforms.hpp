#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dioph/numeric/real.hpp"

namespace dioph {
namespace logforms {

// Inputs of the explicit lower-bound formulas for linear forms in
// logarithms.  Heights are certified reals so callers can pass exact powers
// of e as well as integers; conventions (d >= 4, A_i >= 4, B >= 4) are
// enforced by clamping with a note, matching how the formulas are applied to
// rational instances.
struct BoundRequest {
    unsigned n = 2;           // number of logarithms
    unsigned degree = 4;      // d: max degree of the alpha_i
    unsigned field_degree = 1;  // D: degree of the compositum
    mpq_class delta = 1;      // 0 < delta <= 1
    std::vector<Real> heights;  // A or per-term A_i
    mpz_class coeff_height = 4;  // B

    static BoundRequest uniform(unsigned n, const mpq_class& delta, unsigned d,
                                const mpz_class& a);
};

struct BoundResult {
    Real log10_bound;
    std::string formula;
    std::vector<std::string> notes;  // clamping and convention warnings
    bool double_log = false;  // log10_bound is log10(log10-scale exponent)
};

// H < (4^{n^2} delta^{-1} d^{2n} log A)^{(2n+1)^2}
BoundResult bound_lf4(const BoundRequest& req);

// Dependence relation height: (4^{n^2} d^{2n} log A)^{(2n+1)^2}
BoundResult bound_dependence_relation(const BoundRequest& req);

// |Lambda| > (B Omega)^{-C0 Omega log Omega'} with C0 = (16 n D)^{200 n};
// the rational case drops the bracketed Omega.  Returns log10 of the
// reciprocal bound.
BoundResult bound_sharp77(const BoundRequest& req, bool inhomogeneous);

// |Lambda| > B^{-C1 Omega} with C1 = (16 n D)^{2n+4} (rational case).
BoundResult bound_bw93(const BoundRequest& req);

// max{|x|,|y|} <= exp((10^10 |k|)^10000) for y^2 = x^3 + k, carried as
// log10 of the inner exponent X (exp(X) <= 10^X), i.e. the bound is
// 10^(10^log10_bound).
BoundResult bound_mordell(const mpz_class& k);

// max{|x|,|y|} <= (300000 |m|)^23 for x^3 - 2y^3 = m.
BoundResult bound_thue_cubic(const mpz_class& m);

}  // namespace logforms
}  // namespace dioph
