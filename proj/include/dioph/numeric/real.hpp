#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dioph/numeric/expr.hpp"
#include "dioph/numeric/interval.hpp"

namespace dioph {

enum class Truth { True, False, Unknown };

// Outcome of a certified comparison.  True/False are proofs; Unknown carries
// the enclosure width at which the comparison gave up.
struct Verdict {
    Truth truth = Truth::Unknown;
    mpq_class width = 0;

    bool is_true() const { return truth == Truth::True; }
    bool is_false() const { return truth == Truth::False; }
    bool is_unknown() const { return truth == Truth::Unknown; }
};

std::string to_string(Truth t);

// A certified real number: an interval enclosure plus the recipe to
// recompute it at any precision.  Values are immutable; refined() returns a
// new value whose enclosure is intersected with the current one, so
// refinement never widens.
class Real {
  public:
    Real() : Real(mpq_class(0)) {}
    Real(const mpq_class& q);
    Real(const mpz_class& z) : Real(mpq_class(z)) {}
    Real(long n) : Real(mpq_class(n)) {}
    explicit Real(ExprPtr e, mpfr_prec_t prec = kStartPrecision);

    static Real pi();
    static Real parse(const std::string& text);

    const ExprPtr& expr() const { return expr_; }
    const Interval& enc() const { return enc_; }
    mpfr_prec_t evaluated_prec() const { return prec_; }
    const std::optional<mpq_class>& exact() const { return expr_->exact(); }

    Real refined(mpfr_prec_t prec) const;
    // Doubles precision until width <= target; throws PrecisionExhausted at
    // the ceiling.
    Real refined_to_width(const mpq_class& target, mpfr_prec_t max_prec = 0) const;

    // nullopt when an endpoint is infinite.
    std::optional<mpq_class> width() const { return enc_.width_q(); }

    std::string str(size_t digits = 20) const { return enc_.str(digits); }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    Real log() const;
    Real exp() const;
    Real sqrt() const;
    Real root(unsigned long n) const;
    Real pow(long n) const;
    Real abs() const;

  private:
    ExprPtr expr_;
    Interval enc_;
    mpfr_prec_t prec_;
};

Real log(const Real& a);
Real exp(const Real& a);
Real sqrt(const Real& a);
Real root(const Real& a, unsigned long n);
Real pow(const Real& a, long n);
Real abs(const Real& a);
Real log10(const Real& a);
Real max(const Real& a, const Real& b);

// True iff a > b provably; refines both up to max_prec before answering
// Unknown.  Identical recipes and exact rationals short-circuit.
Verdict compare_greater(const Real& a, const Real& b, mpfr_prec_t max_prec = 0);

// Enclosure of min over integers m of |x - m|.
Real nearest_integer_distance(const Real& x);

// Certified integer extraction; these refine until the answer is unambiguous
// (exact rationals are computed directly).
mpz_class certified_floor(const Real& x, mpfr_prec_t max_prec = 0);
mpz_class certified_ceil(const Real& x, mpfr_prec_t max_prec = 0);
mpz_class certified_round(const Real& x, mpfr_prec_t max_prec = 0);

// Decimal expansion with `frac_digits` digits after the point, certified by
// both endpoints agreeing (i.e. every printed digit is exact, truncated).
std::string certified_decimal(const Real& x, size_t frac_digits, mpfr_prec_t max_prec = 0);

}  // namespace dioph
