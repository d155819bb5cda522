#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

namespace dioph {

// Global refinement knobs.  Every operation that auto-refines starts at
// default_start_precision() and doubles until default_precision_ceiling().
mpfr_prec_t default_precision_ceiling();
void set_default_precision_ceiling(mpfr_prec_t bits);
constexpr mpfr_prec_t kStartPrecision = 128;

// A closed interval [lo, hi] with dyadic (MPFR) endpoints.  Endpoints may be
// -inf/+inf; the invariant lo <= hi (with NaN normalised away to the whole
// line) always holds.  All arithmetic rounds the lower endpoint down and the
// upper endpoint up, so an Interval computed from enclosures of the operands
// encloses the exact result.
class Interval {
  public:
    Interval();                           // [0, 0]
    explicit Interval(mpfr_prec_t prec);  // [0, 0] at the given precision
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
    static Interval from_integer(const mpz_class& z, mpfr_prec_t prec);
    static Interval whole_line(mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    bool lo_finite() const { return mpfr_number_p(lo_) != 0; }
    bool hi_finite() const { return mpfr_number_p(hi_) != 0; }
    bool finite() const { return lo_finite() && hi_finite(); }
    bool is_point() const { return finite() && mpfr_equal_p(lo_, hi_); }
    bool contains_zero() const;
    bool contains(const mpq_class& q) const;

    // Exact conversions (endpoints are dyadic rationals); require finiteness.
    mpq_class lo_q() const;
    mpq_class hi_q() const;
    // hi - lo as an exact rational; nullopt when an endpoint is infinite.
    std::optional<mpq_class> width_q() const;

    // Exact comparisons of the whole interval against a rational.
    bool certainly_le(const mpq_class& q) const;  // hi <= q
    bool certainly_ge(const mpq_class& q) const;  // lo >= q
    bool certainly_lt(const mpq_class& q) const;  // hi < q
    bool certainly_gt(const mpq_class& q) const;  // lo > q

    // floor(x) if it is the same for every x in the interval.
    std::optional<mpz_class> certain_floor() const;

    // Arithmetic.  The result is computed at precision `prec`.
    static Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
    // Division by an interval containing zero gives the whole line unless the
    // divisor is exactly the point zero, which throws NonRefinable.
    static Interval div(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval neg(const Interval& a, mpfr_prec_t prec);
    static Interval abs(const Interval& a, mpfr_prec_t prec);
    static Interval pow_int(const Interval& a, long n, mpfr_prec_t prec);
    // n-th root; even n clamps a negative lower endpoint to zero and throws
    // NonRefinable when the interval is certainly negative.
    static Interval rootn(const Interval& a, unsigned long n, mpfr_prec_t prec);
    static Interval log(const Interval& a, mpfr_prec_t prec);
    static Interval exp(const Interval& a, mpfr_prec_t prec);
    // Enclosure of min over integers m of |x - m|, always within [0, 1/2].
    static Interval nearest_int_dist(const Interval& a, mpfr_prec_t prec);
    static Interval max(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval min(const Interval& a, const Interval& b, mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b, mpfr_prec_t prec);

    // Intersection of two valid enclosures of the same value.  Throws
    // std::logic_error if they are disjoint (that would be a soundness bug).
    Interval intersect(const Interval& o) const;

    // Lossless endpoint serialisation: "m*2^e", "0", "-inf" or "inf".
    std::string dyadic_lo() const;
    std::string dyadic_hi() const;
    static Interval from_dyadic(const std::string& lo, const std::string& hi);

    // Human-readable "[lo, hi]" with about `digits` significant digits.
    std::string str(size_t digits = 20) const;

  private:
    void become_whole_line();
    void normalise();  // NaN -> whole line, enforce lo <= hi

    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

}  // namespace dioph
