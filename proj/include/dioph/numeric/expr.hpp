#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "dioph/numeric/interval.hpp"

namespace dioph {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// An immutable expression DAG: the "recipe" of a certified real.  Shared
// subexpressions are evaluated once per evaluator pass, and a recipe can be
// replayed at any working precision, which is what makes certificates
// reproducible.
class Expr {
  public:
    enum class Kind {
        Constant,  // exact rational
        Pi,
        Add,
        Sub,
        Mul,
        Div,
        Neg,
        Abs,
        Root,     // n-th root, n >= 1
        PowInt,   // integer power (n may be negative)
        Log,      // natural logarithm
        Exp,
        NearestIntDist,  // distance to the nearest integer
        Max,
        Min,
    };

    static ExprPtr constant(mpq_class q);
    static ExprPtr integer(const mpz_class& z) { return constant(mpq_class(z)); }
    static ExprPtr pi();
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr abs(ExprPtr a);
    static ExprPtr sqrt(ExprPtr a) { return root(std::move(a), 2); }
    static ExprPtr root(ExprPtr a, unsigned long n);
    static ExprPtr pow_int(ExprPtr a, long n);
    static ExprPtr log(ExprPtr a);
    static ExprPtr exp(ExprPtr a);
    static ExprPtr nearest_int_dist(ExprPtr a);
    static ExprPtr max(ExprPtr a, ExprPtr b);
    static ExprPtr min(ExprPtr a, ExprPtr b);

    Kind kind() const { return kind_; }
    const mpq_class& value() const { return value_; }  // Constant only
    const ExprPtr& left() const { return a_; }
    const ExprPtr& right() const { return b_; }
    long index() const { return n_; }  // Root / PowInt

    // Exact rational value when the expression folds to one (rationals are
    // closed under +,-,*,/, integer powers and exact roots).
    const std::optional<mpq_class>& exact() const { return exact_; }

    // Printed form; parse(to_string()) reproduces the same value.
    std::string to_string() const;

    // Parses the expression grammar used by the CLI:
    //   numbers (integer, fraction via /, decimals), pi,
    //   + - * / ^ (integer or (p/q) exponents), sqrt(x), root(x,n),
    //   log(x), exp(x), abs(x), parentheses.
    static ExprPtr parse(const std::string& text);

  private:
    Expr() = default;
    static ExprPtr make(Kind k, ExprPtr a, ExprPtr b, long n, mpq_class v);
    void fold();

    Kind kind_ = Kind::Constant;
    mpq_class value_;
    ExprPtr a_;
    ExprPtr b_;
    long n_ = 0;
    std::optional<mpq_class> exact_;
};

// Evaluates expression DAGs with interval arithmetic at a fixed working
// precision, memoising shared nodes.
class Evaluator {
  public:
    explicit Evaluator(mpfr_prec_t prec) : prec_(prec) {}
    mpfr_prec_t prec() const { return prec_; }
    const Interval& eval(const ExprPtr& e);

  private:
    mpfr_prec_t prec_;
    std::unordered_map<const Expr*, Interval> memo_;
};

}  // namespace dioph
