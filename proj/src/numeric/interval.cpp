#include "dioph/numeric/interval.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

std::atomic<mpfr_prec_t> g_prec_ceiling{mpfr_prec_t(1) << 20};

// Exact rational value of a finite mpfr number.
mpq_class mpfr_to_q(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpz_class man;
    mpfr_exp_t e = mpfr_get_z_2exp(man.get_mpz_t(), x);
    mpq_class r(man);
    if (e >= 0) {
        mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()),
                     static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()),
                     static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

std::string dyadic_str(mpfr_srcptr x) {
    if (mpfr_inf_p(x)) return mpfr_sgn(x) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(x)) return "0";
    mpz_class man;
    mpfr_exp_t e = mpfr_get_z_2exp(man.get_mpz_t(), x);
    return man.get_str() + "*2^" + std::to_string(static_cast<long>(e));
}

void dyadic_parse(mpfr_ptr out, const std::string& s) {
    if (s == "inf") {
        mpfr_set_inf(out, 1);
        return;
    }
    if (s == "-inf") {
        mpfr_set_inf(out, -1);
        return;
    }
    if (s == "0") {
        mpfr_set_zero(out, 1);
        return;
    }
    auto star = s.find("*2^");
    if (star == std::string::npos) throw ParseError("bad dyadic literal: " + s);
    mpz_class man(s.substr(0, star));
    long e = std::stol(s.substr(star + 3));
    // Widen so the conversion is exact.
    mpfr_prec_t need = mpz_sizeinbase(man.get_mpz_t(), 2) + 8;
    if (mpfr_get_prec(out) < need) mpfr_set_prec(out, need);
    mpfr_set_z_2exp(out, man.get_mpz_t(), e, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t default_precision_ceiling() { return g_prec_ceiling.load(); }

void set_default_precision_ceiling(mpfr_prec_t bits) {
    if (bits < kStartPrecision) throw InvalidParameters("precision ceiling below 128 bits");
    g_prec_ceiling.store(bits);
}

Interval::Interval() : Interval(kStartPrecision) {}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_integer(const mpz_class& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::whole_line(mpfr_prec_t prec) {
    Interval r(prec);
    r.become_whole_line();
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

void Interval::become_whole_line() {
    mpfr_set_inf(lo_, -1);
    mpfr_set_inf(hi_, 1);
}

void Interval::normalise() {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_greater_p(lo_, hi_)) {
        become_whole_line();
    }
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const mpq_class& q) const {
    bool lo_ok = !lo_finite() || mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0;
    bool hi_ok = !hi_finite() || mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    return lo_ok && hi_ok;
}

mpq_class Interval::lo_q() const {
    if (!lo_finite()) throw std::logic_error("lo_q on infinite endpoint");
    return mpfr_to_q(lo_);
}

mpq_class Interval::hi_q() const {
    if (!hi_finite()) throw std::logic_error("hi_q on infinite endpoint");
    return mpfr_to_q(hi_);
}

std::optional<mpq_class> Interval::width_q() const {
    if (!finite()) return std::nullopt;
    return hi_q() - lo_q();
}

bool Interval::certainly_le(const mpq_class& q) const {
    return hi_finite() && mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool Interval::certainly_ge(const mpq_class& q) const {
    return lo_finite() && mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

bool Interval::certainly_lt(const mpq_class& q) const {
    return hi_finite() && mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool Interval::certainly_gt(const mpq_class& q) const {
    return lo_finite() && mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

std::optional<mpz_class> Interval::certain_floor() const {
    if (!finite()) return std::nullopt;
    mpz_class fl, fh;
    mpfr_get_z(fl.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(fh.get_mpz_t(), hi_, MPFR_RNDD);
    if (fl == fh) return fl;
    return std::nullopt;
}

Interval Interval::add(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::sub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::mul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    // Min/max over the four endpoint products, each rounded in the direction
    // that can only widen the result.
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);  // 0 * inf: 0 is in the hull
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    r.normalise();
    return r;
}

Interval Interval::div(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    if (b.contains_zero()) {
        if (b.is_point()) throw NonRefinable("division by exact zero");
        return whole_line(prec);
    }
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    r.normalise();
    return r;
}

Interval Interval::neg(const Interval& a, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::abs(const Interval& a, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        if (mpfr_cmp(r.hi_, a.hi_) < 0) mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
    }
    r.normalise();
    return r;
}

Interval Interval::pow_int(const Interval& a, long n, mpfr_prec_t prec) {
    if (n == 0) return from_integer(1, prec);
    if (n < 0) {
        Interval p = pow_int(a, -n, prec);
        return div(from_integer(1, prec), p, prec);
    }
    Interval r(prec);
    if (n % 2 == 1 || mpfr_sgn(a.lo_) >= 0) {
        // monotone increasing on the whole line (odd) or on [0, inf)
        mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        // even power of a nonpositive interval: decreasing
        mpfr_pow_si(r.lo_, a.hi_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.lo_, n, MPFR_RNDU);
    } else {
        // straddles zero, even power: [0, max(|lo|, |hi|)^n]
        mpfr_set_zero(r.lo_, 1);
        mpfr_t m;
        mpfr_init2(m, prec);
        mpfr_neg(m, a.lo_, MPFR_RNDU);
        if (mpfr_cmp(m, a.hi_) < 0) mpfr_set(m, a.hi_, MPFR_RNDU);
        mpfr_pow_si(r.hi_, m, n, MPFR_RNDU);
        mpfr_clear(m);
    }
    r.normalise();
    return r;
}

Interval Interval::rootn(const Interval& a, unsigned long n, mpfr_prec_t prec) {
    if (n == 0) throw InvalidParameters("0th root");
    Interval r(prec);
    if (n % 2 == 0) {
        if (mpfr_sgn(a.hi_) < 0) throw NonRefinable("even root of a negative number");
        if (mpfr_sgn(a.lo_) < 0) {
            mpfr_set_zero(r.lo_, 1);
        } else {
            mpfr_rootn_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        }
        mpfr_rootn_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    } else {
        mpfr_rootn_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    }
    r.normalise();
    return r;
}

Interval Interval::log(const Interval& a, mpfr_prec_t prec) {
    if (mpfr_sgn(a.hi_) <= 0) throw NonRefinable("log of a nonpositive number");
    Interval r(prec);
    if (mpfr_sgn(a.lo_) <= 0) {
        mpfr_set_inf(r.lo_, -1);
    } else {
        mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    }
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::exp(const Interval& a, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::nearest_int_dist(const Interval& a, mpfr_prec_t prec) {
    Interval half = from_rational(mpq_class(1, 2), prec);
    if (!a.finite()) {
        Interval r(prec);
        mpfr_set_zero(r.lo_, 1);
        mpfr_set(r.hi_, half.hi_, MPFR_RNDU);
        return r;
    }
    mpq_class l = a.lo_q();
    mpq_class h = a.hi_q();
    mpq_class w = h - l;
    if (w >= 1) {
        Interval r(prec);
        mpfr_set_zero(r.lo_, 1);
        mpfr_set(r.hi_, half.hi_, MPFR_RNDU);
        return r;
    }
    // Shift by floor(l): now l' in [0,1), h' in [0,2).
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
    mpq_class lp = l - mpq_class(k);
    mpq_class hp = h - mpq_class(k);
    auto dist = [](const mpq_class& t) -> mpq_class {
        // distance of t in [0,2) to {0,1,2}
        if (t <= mpq_class(1, 2)) return t;
        if (t <= 1) return 1 - t;
        if (t <= mpq_class(3, 2)) return t - 1;
        return 2 - t;
    };
    bool has_int = (lp == 0) || (lp <= 1 && 1 <= hp);
    mpq_class dmin = has_int ? mpq_class(0) : std::min(dist(lp), dist(hp));
    bool has_half = (lp <= mpq_class(1, 2) && mpq_class(1, 2) <= hp) ||
                    (lp <= mpq_class(3, 2) && mpq_class(3, 2) <= hp);
    mpq_class dmax = has_half ? mpq_class(1, 2) : std::max(dist(lp), dist(hp));
    Interval r(prec);
    mpfr_set_q(r.lo_, dmin.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, dmax.get_mpq_t(), MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::max(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::min(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.normalise();
    return r;
}

Interval Interval::intersect(const Interval& o) const {
    mpfr_prec_t p = std::max(std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)),
                             std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_)));
    Interval r(p);
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);  // exact: r has enough precision
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) {
        throw std::logic_error("intersection of enclosures is empty");
    }
    return r;
}

std::string Interval::dyadic_lo() const { return dyadic_str(lo_); }
std::string Interval::dyadic_hi() const { return dyadic_str(hi_); }

Interval Interval::from_dyadic(const std::string& lo, const std::string& hi) {
    Interval r(kStartPrecision);
    dyadic_parse(r.lo_, lo);
    dyadic_parse(r.hi_, hi);
    r.normalise();
    return r;
}

std::string Interval::str(size_t digits) const {
    auto one = [&](mpfr_srcptr x, mpfr_rnd_t rnd) -> std::string {
        if (mpfr_inf_p(x)) return mpfr_sgn(x) < 0 ? "-inf" : "inf";
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*R*g", static_cast<int>(digits), rnd, x);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    };
    return "[" + one(lo_, MPFR_RNDD) + ", " + one(hi_, MPFR_RNDU) + "]";
}

}  // namespace dioph
