#include "dioph/numeric/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

// Folding guard: skip exact folding when the result would be absurdly big.
constexpr size_t kMaxFoldBits = 1u << 22;

size_t q_bits(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Exact n-th root of a rational if it is a perfect power, else nullopt.
std::optional<mpq_class> exact_root(const mpq_class& q, unsigned long n) {
    if (n == 1) return q;
    if (sgn(q) < 0 && n % 2 == 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    bool neg = sgn(num) < 0;
    mpz_class anum = neg ? mpz_class(-num) : num;
    if (!mpz_root(rn.get_mpz_t(), anum.get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
    mpq_class r(neg ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace

ExprPtr Expr::make(Kind k, ExprPtr a, ExprPtr b, long n, mpq_class v) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = k;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    e->n_ = n;
    e->value_ = std::move(v);
    e->fold();
    return e;
}

ExprPtr Expr::constant(mpq_class q) {
    q.canonicalize();
    return make(Kind::Constant, nullptr, nullptr, 0, std::move(q));
}

ExprPtr Expr::pi() { return make(Kind::Pi, nullptr, nullptr, 0, 0); }
ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return make(Kind::Add, std::move(a), std::move(b), 0, 0); }
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return make(Kind::Sub, std::move(a), std::move(b), 0, 0); }
ExprPtr Expr::mul(ExprPtr a, ExprPtr b) { return make(Kind::Mul, std::move(a), std::move(b), 0, 0); }
ExprPtr Expr::div(ExprPtr a, ExprPtr b) { return make(Kind::Div, std::move(a), std::move(b), 0, 0); }
ExprPtr Expr::neg(ExprPtr a) { return make(Kind::Neg, std::move(a), nullptr, 0, 0); }
ExprPtr Expr::abs(ExprPtr a) { return make(Kind::Abs, std::move(a), nullptr, 0, 0); }

ExprPtr Expr::root(ExprPtr a, unsigned long n) {
    if (n == 0) throw InvalidParameters("0th root");
    return make(Kind::Root, std::move(a), nullptr, static_cast<long>(n), 0);
}

ExprPtr Expr::pow_int(ExprPtr a, long n) {
    return make(Kind::PowInt, std::move(a), nullptr, n, 0);
}

ExprPtr Expr::log(ExprPtr a) { return make(Kind::Log, std::move(a), nullptr, 0, 0); }
ExprPtr Expr::exp(ExprPtr a) { return make(Kind::Exp, std::move(a), nullptr, 0, 0); }
ExprPtr Expr::nearest_int_dist(ExprPtr a) {
    return make(Kind::NearestIntDist, std::move(a), nullptr, 0, 0);
}
ExprPtr Expr::max(ExprPtr a, ExprPtr b) { return make(Kind::Max, std::move(a), std::move(b), 0, 0); }
ExprPtr Expr::min(ExprPtr a, ExprPtr b) { return make(Kind::Min, std::move(a), std::move(b), 0, 0); }

void Expr::fold() {
    switch (kind_) {
        case Kind::Constant:
            exact_ = value_;
            return;
        case Kind::Pi:
            return;
        default:
            break;
    }
    const auto& ea = a_ ? a_->exact_ : std::nullopt;
    const auto& eb = b_ ? b_->exact_ : std::nullopt;
    switch (kind_) {
        case Kind::Add:
            if (ea && eb) exact_ = *ea + *eb;
            break;
        case Kind::Sub:
            if (ea && eb) exact_ = *ea - *eb;
            break;
        case Kind::Mul:
            if (ea && eb && q_bits(*ea) + q_bits(*eb) < kMaxFoldBits) exact_ = *ea * *eb;
            break;
        case Kind::Div:
            if (ea && eb && sgn(*eb) != 0) exact_ = *ea / *eb;
            break;
        case Kind::Neg:
            if (ea) exact_ = -*ea;
            break;
        case Kind::Abs:
            if (ea) exact_ = ::abs(*ea);
            break;
        case Kind::Root:
            if (ea) exact_ = exact_root(*ea, static_cast<unsigned long>(n_));
            break;
        case Kind::PowInt:
            if (ea) {
                long n = n_;
                if (n == 0) {
                    exact_ = mpq_class(1);
                } else if (q_bits(*ea) * static_cast<size_t>(std::labs(n)) < kMaxFoldBits) {
                    if (n < 0 && sgn(*ea) == 0) break;
                    mpq_class base = n < 0 ? mpq_class(1 / *ea) : *ea;
                    unsigned long k = static_cast<unsigned long>(std::labs(n));
                    mpq_class r;
                    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
                    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
                    r.canonicalize();
                    exact_ = r;
                }
            }
            break;
        case Kind::Log:
            if (ea && *ea == 1) exact_ = mpq_class(0);
            break;
        case Kind::Exp:
            if (ea && *ea == 0) exact_ = mpq_class(1);
            break;
        case Kind::NearestIntDist:
            if (ea) {
                mpz_class k;
                mpz_fdiv_q(k.get_mpz_t(), ea->get_num_mpz_t(), ea->get_den_mpz_t());
                mpq_class f = *ea - mpq_class(k);
                exact_ = f <= mpq_class(1, 2) ? f : mpq_class(1) - f;
            }
            break;
        case Kind::Max:
            if (ea && eb) exact_ = std::max(*ea, *eb);
            break;
        case Kind::Min:
            if (ea && eb) exact_ = std::min(*ea, *eb);
            break;
        default:
            break;
    }
}

const Interval& Evaluator::eval(const ExprPtr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Interval r(prec_);
    switch (e->kind()) {
        case Expr::Kind::Constant:
            r = Interval::from_rational(e->value(), prec_);
            break;
        case Expr::Kind::Pi:
            r = Interval::pi(prec_);
            break;
        case Expr::Kind::Add:
            r = Interval::add(eval(e->left()), eval(e->right()), prec_);
            break;
        case Expr::Kind::Sub:
            r = Interval::sub(eval(e->left()), eval(e->right()), prec_);
            break;
        case Expr::Kind::Mul:
            r = Interval::mul(eval(e->left()), eval(e->right()), prec_);
            break;
        case Expr::Kind::Div:
            r = Interval::div(eval(e->left()), eval(e->right()), prec_);
            break;
        case Expr::Kind::Neg:
            r = Interval::neg(eval(e->left()), prec_);
            break;
        case Expr::Kind::Abs:
            r = Interval::abs(eval(e->left()), prec_);
            break;
        case Expr::Kind::Root:
            r = Interval::rootn(eval(e->left()), static_cast<unsigned long>(e->index()), prec_);
            break;
        case Expr::Kind::PowInt:
            r = Interval::pow_int(eval(e->left()), e->index(), prec_);
            break;
        case Expr::Kind::Log:
            r = Interval::log(eval(e->left()), prec_);
            break;
        case Expr::Kind::Exp:
            r = Interval::exp(eval(e->left()), prec_);
            break;
        case Expr::Kind::NearestIntDist:
            r = Interval::nearest_int_dist(eval(e->left()), prec_);
            break;
        case Expr::Kind::Max:
            r = Interval::max(eval(e->left()), eval(e->right()), prec_);
            break;
        case Expr::Kind::Min:
            r = Interval::min(eval(e->left()), eval(e->right()), prec_);
            break;
    }
    return memo_.emplace(e.get(), std::move(r)).first->second;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            return 2;
        case Expr::Kind::Neg:
            return 3;
        case Expr::Kind::PowInt:
            return 4;
        default:
            return 5;
    }
}

void print(const Expr& e, std::string& out) {
    auto child = [&](const ExprPtr& c, bool strict) {
        bool paren = precedence(c->kind()) < precedence(e.kind()) ||
                     (strict && precedence(c->kind()) == precedence(e.kind()));
        if (paren) out += '(';
        print(*c, out);
        if (paren) out += ')';
    };
    switch (e.kind()) {
        case Expr::Kind::Constant: {
            const mpq_class& q = e.value();
            if (sgn(q) < 0) {
                out += '(' + q.get_str() + ')';
            } else {
                out += q.get_str();
            }
            return;
        }
        case Expr::Kind::Pi:
            out += "pi";
            return;
        case Expr::Kind::Add:
            child(e.left(), false);
            out += " + ";
            child(e.right(), true);
            return;
        case Expr::Kind::Sub:
            child(e.left(), false);
            out += " - ";
            child(e.right(), true);
            return;
        case Expr::Kind::Mul:
            child(e.left(), false);
            out += "*";
            child(e.right(), true);
            return;
        case Expr::Kind::Div:
            child(e.left(), false);
            out += "/";
            child(e.right(), true);
            return;
        case Expr::Kind::Neg:
            out += "-";
            child(e.left(), true);
            return;
        case Expr::Kind::Abs:
            out += "abs(";
            print(*e.left(), out);
            out += ')';
            return;
        case Expr::Kind::Root:
            if (e.index() == 2) {
                out += "sqrt(";
                print(*e.left(), out);
                out += ')';
            } else {
                out += "root(";
                print(*e.left(), out);
                out += ", " + std::to_string(e.index()) + ")";
            }
            return;
        case Expr::Kind::PowInt:
            child(e.left(), true);
            out += "^";
            if (e.index() < 0) {
                out += "(" + std::to_string(e.index()) + ")";
            } else {
                out += std::to_string(e.index());
            }
            return;
        case Expr::Kind::Log:
            out += "log(";
            print(*e.left(), out);
            out += ')';
            return;
        case Expr::Kind::Exp:
            out += "exp(";
            print(*e.left(), out);
            out += ')';
            return;
        case Expr::Kind::NearestIntDist:
            out += "nearestintdist(";
            print(*e.left(), out);
            out += ')';
            return;
        case Expr::Kind::Max:
            out += "max(";
            print(*e.left(), out);
            out += ", ";
            print(*e.right(), out);
            out += ')';
            return;
        case Expr::Kind::Min:
            out += "min(";
            print(*e.left(), out);
            out += ", ";
            print(*e.right(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string Expr::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing (recursive descent)

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("expression parse error at offset " + std::to_string(i) + ": " + what);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+')) {
                e = Expr::add(e, parse_term());
            } else if (eat('-')) {
                e = Expr::sub(e, parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (eat('*')) {
                e = Expr::mul(e, parse_factor());
            } else if (eat('/')) {
                e = Expr::div(e, parse_factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_factor() {
        if (eat('-')) return Expr::neg(parse_factor());
        if (eat('+')) return parse_factor();
        ExprPtr base = parse_atom();
        if (eat('^')) return parse_power(base);
        return base;
    }

    // Exponent: integer, (integer), or (p/q) which becomes root(x^p, q).
    ExprPtr parse_power(ExprPtr base) {
        skip();
        bool paren = eat('(');
        bool nege = eat('-');
        long p = parse_long();
        long q = 1;
        if (paren && eat('/')) {
            q = parse_long();
            if (q <= 0) fail("root index must be positive");
        }
        if (paren && !eat(')')) fail("expected ')'");
        if (nege) p = -p;
        ExprPtr e = (p == 1) ? base : Expr::pow_int(base, p);
        if (q != 1) e = Expr::root(e, static_cast<unsigned long>(q));
        if (eat('^')) fail("chained '^' needs parentheses");
        return e;
    }

    long parse_long() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        if (i - start > 7) fail("exponent too large");
        return std::stol(s.substr(start, i - start));
    }

    ExprPtr parse_atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of expression");
        char c = s[i];
        if (c == '(') {
            ++i;
            ExprPtr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    ExprPtr parse_number() {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string intpart = s.substr(start, i - start);
        if (i < s.size() && s[i] == '.') {
            ++i;
            size_t fs = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            std::string frac = s.substr(fs, i - fs);
            if (frac.empty()) fail("digits expected after '.'");
            mpz_class num(intpart + frac);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            mpq_class q(num, den);
            q.canonicalize();
            return Expr::constant(q);
        }
        return Expr::constant(mpq_class(mpz_class(intpart)));
    }

    ExprPtr parse_name() {
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            ++i;
        }
        std::string name = s.substr(start, i - start);
        if (name == "pi") return Expr::pi();
        if (!eat('(')) fail("expected '(' after '" + name + "'");
        ExprPtr a = parse_expr();
        ExprPtr e;
        if (name == "sqrt") {
            e = Expr::sqrt(a);
        } else if (name == "log") {
            e = Expr::log(a);
        } else if (name == "exp") {
            e = Expr::exp(a);
        } else if (name == "abs") {
            e = Expr::abs(a);
        } else if (name == "nearestintdist") {
            e = Expr::nearest_int_dist(a);
        } else if (name == "root") {
            if (!eat(',')) fail("root(x, n) needs two arguments");
            long n = parse_long();
            if (n <= 0) fail("root index must be positive");
            e = Expr::root(a, static_cast<unsigned long>(n));
        } else if (name == "max" || name == "min") {
            if (!eat(',')) fail(name + "(a, b) needs two arguments");
            ExprPtr b = parse_expr();
            e = name == "max" ? Expr::max(a, b) : Expr::min(a, b);
        } else {
            fail("unknown function '" + name + "'");
        }
        if (!eat(')')) fail("expected ')'");
        return e;
    }
};

}  // namespace

ExprPtr Expr::parse(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.parse_expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace dioph
