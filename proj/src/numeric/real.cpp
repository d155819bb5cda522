#include "dioph/numeric/real.hpp"

#include <algorithm>

#include "dioph/errors.hpp"

namespace dioph {

std::string to_string(Truth t) {
    switch (t) {
        case Truth::True:
            return "true";
        case Truth::False:
            return "false";
        default:
            return "unknown";
    }
}

Real::Real(const mpq_class& q) : Real(Expr::constant(q)) {}

Real::Real(ExprPtr e, mpfr_prec_t prec) : expr_(std::move(e)), prec_(prec) {
    Evaluator ev(prec_);
    enc_ = ev.eval(expr_);
}

Real Real::pi() { return Real(Expr::pi()); }

Real Real::parse(const std::string& text) { return Real(Expr::parse(text)); }

Real Real::refined(mpfr_prec_t prec) const {
    Real r;
    r.expr_ = expr_;
    r.prec_ = std::max(prec, prec_);
    Evaluator ev(prec);
    r.enc_ = ev.eval(expr_).intersect(enc_);
    return r;
}

Real Real::refined_to_width(const mpq_class& target, mpfr_prec_t max_prec) const {
    if (max_prec == 0) max_prec = default_precision_ceiling();
    Real cur = *this;
    for (;;) {
        auto w = cur.width();
        if (w && *w <= target) return cur;
        if (cur.prec_ >= max_prec) {
            throw PrecisionExhausted("target width not reached at precision ceiling");
        }
        cur = cur.refined(std::min(max_prec, cur.prec_ * 2));
    }
}

namespace {

Real combine(ExprPtr e, mpfr_prec_t prec) { return Real(std::move(e), prec); }

mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(a.evaluated_prec(), b.evaluated_prec());
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
    return combine(Expr::add(a.expr(), b.expr()), join_prec(a, b));
}
Real operator-(const Real& a, const Real& b) {
    return combine(Expr::sub(a.expr(), b.expr()), join_prec(a, b));
}
Real operator*(const Real& a, const Real& b) {
    return combine(Expr::mul(a.expr(), b.expr()), join_prec(a, b));
}
Real operator/(const Real& a, const Real& b) {
    return combine(Expr::div(a.expr(), b.expr()), join_prec(a, b));
}
Real operator-(const Real& a) { return combine(Expr::neg(a.expr()), a.evaluated_prec()); }

Real Real::log() const { return combine(Expr::log(expr_), prec_); }
Real Real::exp() const { return combine(Expr::exp(expr_), prec_); }
Real Real::sqrt() const { return combine(Expr::sqrt(expr_), prec_); }
Real Real::root(unsigned long n) const { return combine(Expr::root(expr_, n), prec_); }
Real Real::pow(long n) const { return combine(Expr::pow_int(expr_, n), prec_); }
Real Real::abs() const { return combine(Expr::abs(expr_), prec_); }

Real log(const Real& a) { return a.log(); }
Real exp(const Real& a) { return a.exp(); }
Real sqrt(const Real& a) { return a.sqrt(); }
Real root(const Real& a, unsigned long n) { return a.root(n); }
Real pow(const Real& a, long n) { return a.pow(n); }
Real abs(const Real& a) { return a.abs(); }

Real log10(const Real& a) {
    return Real(Expr::div(Expr::log(a.expr()), Expr::log(Expr::constant(10))),
                a.evaluated_prec());
}

Real max(const Real& a, const Real& b) {
    return combine(Expr::max(a.expr(), b.expr()), join_prec(a, b));
}

Verdict compare_greater(const Real& a, const Real& b, mpfr_prec_t max_prec) {
    if (max_prec == 0) max_prec = default_precision_ceiling();
    // Identical recipe: a == b, so "a > b" is provably false.
    if (a.expr() == b.expr()) return {Truth::False, 0};
    if (a.exact() && b.exact()) {
        return {*a.exact() > *b.exact() ? Truth::True : Truth::False, 0};
    }
    Real x = a, y = b;
    for (;;) {
        if (mpfr_greater_p(x.enc().lo(), y.enc().hi())) return {Truth::True, 0};
        if (mpfr_less_p(x.enc().hi(), y.enc().lo())) return {Truth::False, 0};
        // a <= b is also certain when hi(a) <= lo(b) with touching endpoints
        // only if one side is exact; keep refining otherwise.
        mpfr_prec_t p = std::max(x.evaluated_prec(), y.evaluated_prec());
        if (p >= max_prec) {
            mpq_class w = 0;
            if (auto wx = x.width()) w += *wx;
            if (auto wy = y.width()) w += *wy;
            return {Truth::Unknown, w};
        }
        p = std::min(max_prec, p * 2);
        x = x.refined(p);
        y = y.refined(p);
    }
}

Real nearest_integer_distance(const Real& x) {
    return Real(Expr::nearest_int_dist(x.expr()), x.evaluated_prec());
}

namespace {

// Shared driver: f maps an interval to an integer when unambiguous.
template <typename F>
mpz_class certified_int(const Real& x, mpfr_prec_t max_prec, F f, const char* what) {
    if (max_prec == 0) max_prec = default_precision_ceiling();
    Real cur = x;
    for (;;) {
        if (auto v = f(cur)) return *v;
        if (cur.evaluated_prec() >= max_prec) {
            throw PrecisionExhausted(std::string(what) + " not certifiable at precision ceiling");
        }
        cur = cur.refined(std::min(max_prec, cur.evaluated_prec() * 2));
    }
}

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace

mpz_class certified_floor(const Real& x, mpfr_prec_t max_prec) {
    if (x.exact()) return floor_q(*x.exact());
    return certified_int(
        x, max_prec, [](const Real& r) { return r.enc().certain_floor(); }, "floor");
}

mpz_class certified_ceil(const Real& x, mpfr_prec_t max_prec) {
    if (x.exact()) {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), x.exact()->get_num_mpz_t(), x.exact()->get_den_mpz_t());
        return r;
    }
    return -certified_floor(-x, max_prec);
}

mpz_class certified_round(const Real& x, mpfr_prec_t max_prec) {
    return certified_floor(x + Real(mpq_class(1, 2)), max_prec);
}

std::string certified_decimal(const Real& x, size_t frac_digits, mpfr_prec_t max_prec) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    Real scaled = x * Real(mpq_class(scale));
    // Truncate toward zero: floor of |x|*10^f, certified.
    mpz_class n = certified_floor(scaled, max_prec);
    bool neg = n < 0;
    if (neg) n = certified_floor(-scaled, max_prec);
    if (n < 0) n = 0;  // value straddling zero at this resolution
    mpz_class ip = n / scale, fp = n % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), frac_digits - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (frac_digits > 0) out += "." + frac;
    return out;
}

}  // namespace dioph
