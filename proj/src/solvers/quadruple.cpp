#include "dioph/solvers/quadruple.hpp"

#include <algorithm>
#include <set>

#include "dioph/errors.hpp"

namespace dioph {
namespace solvers {

namespace {

// Exact arithmetic in Q(sqrt2, sqrt3): a + b sqrt2 + c sqrt3 + d sqrt6.
struct QF {
    mpq_class a, b, c, d;

    QF operator*(const QF& o) const {
        QF r;
        r.a = a * o.a + 2 * b * o.b + 3 * c * o.c + 6 * d * o.d;
        r.b = a * o.b + b * o.a + 3 * (c * o.d + d * o.c);
        r.c = a * o.c + c * o.a + 2 * (b * o.d + d * o.b);
        r.d = a * o.d + d * o.a + b * o.c + c * o.b;
        return r;
    }
    QF operator+(const QF& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    QF operator-(const QF& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    bool operator==(const QF& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    QF conj(bool flip2, bool flip3) const {
        QF r = *this;
        if (flip2) {
            r.b = -r.b;
            r.d = -r.d;
        }
        if (flip3) {
            r.c = -r.c;
            r.d = -r.d;
        }
        return r;
    }

    QF inverse() const {
        // 1/x = (prod of the other three conjugates) / norm
        QF p = conj(true, false) * conj(false, true) * conj(true, true);
        QF n = *this * p;
        if (!n.is_rational() || n.a == 0) throw std::logic_error("field norm is not rational");
        mpq_class inv = 1 / n.a;
        return {p.a * inv, p.b * inv, p.c * inv, p.d * inv};
    }
};

// Minimal polynomial of x over Q as the product over its distinct
// conjugates; returns primitive integer coefficients, ascending.
std::vector<mpz_class> min_poly_int(const QF& x) {
    std::vector<QF> conjugates;
    for (bool f2 : {false, true}) {
        for (bool f3 : {false, true}) {
            QF c = x.conj(f2, f3);
            if (std::none_of(conjugates.begin(), conjugates.end(),
                             [&](const QF& o) { return o == c; })) {
                conjugates.push_back(c);
            }
        }
    }
    std::vector<QF> poly{QF{1, 0, 0, 0}};
    for (const QF& root : conjugates) {
        // poly <- poly * (X - root)
        std::vector<QF> next(poly.size() + 1, QF{0, 0, 0, 0});
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = {next[i + 1].a + poly[i].a, next[i + 1].b + poly[i].b,
                           next[i + 1].c + poly[i].c, next[i + 1].d + poly[i].d};
            next[i] = next[i] - root * poly[i];
        }
        poly = std::move(next);
    }
    // Coefficients must be rational.
    mpz_class den_lcm = 1;
    for (const auto& c : poly) {
        if (!c.is_rational()) throw std::logic_error("minimal polynomial not rational");
        mpz_class den = c.a.get_den();
        den_lcm = lcm(den_lcm, den);
    }
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (const auto& c : poly) {
        mpq_class v = c.a * den_lcm;
        out.push_back(mpz_class(v.get_num()));
        content = gcd(content, out.back());
    }
    for (auto& z : out) z /= content;
    return out;
}

mpz_class poly_height(const std::vector<mpz_class>& coeffs) {
    mpz_class h = 0;
    for (const auto& c : coeffs) h = std::max(h, mpz_class(::abs(c)));
    return h;
}

void certify(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("pipeline constant certification failed: ") + what);
}

// The finitely many numeric inequalities in the derivation of
// |r*theta - s + phi_j| < 13^{-r} (r >= 1, s >= 1); the r-monotone steps
// are classical and commented at the call sites.
void certify_pipeline_constants() {
    Real s2 = sqrt(Real(2));
    Real s3 = sqrt(Real(3));
    Real s8 = sqrt(Real(8));
    Real u1 = Real(2) + s3;   // 2+sqrt3
    Real v1 = Real(3) + s8;   // 3+sqrt8
    Real u1i = Real(2) - s3;  // (2+sqrt3)^-1
    Real v1i = Real(3) - s8;  // (3+sqrt8)^-1
    mpq_class q;

    // sigma bounds the conjugate error at r = s = 1 and only shrinks beyond.
    Real sigma = s8 * (s3 - Real(1)) * u1i + s3 * (s8 - Real(1)) * v1i;
    certify(compare_greater(Real(mpq_class(11, 10)), sigma).is_true(), "sigma <= 11/10");
    // sqrt3 * v_s >= c1 * (2+sqrt3)^r with c1 = 74/10.
    Real c1 = s8 * (Real(1) + s3) - Real(mpq_class(11, 10)) * u1i;
    certify(compare_greater(c1, Real(mpq_class(74, 10))).is_true(), "c1 >= 74/10");
    // (3+sqrt8)^s >= (111/100) (2+sqrt3)^r.
    certify(compare_greater(Real(mpq_class(74, 10)) / (s3 * (Real(1) + s8)),
                            Real(mpq_class(111, 100)))
                .is_true(),
            "c2 >= 111/100");
    // conjugate error <= c3 * (2-sqrt3)^r with c3 = 51/10.
    Real c3 = s8 * (s3 - Real(1)) + s3 * (s8 - Real(1)) * Real(mpq_class(100, 111));
    certify(compare_greater(Real(mpq_class(51, 10)), c3).is_true(), "c3 <= 51/10");
    // relative error <= (7/10) (2+sqrt3)^{-2r}.
    certify(mpq_class(51, 10) <= mpq_class(7, 10) * mpq_class(74, 10), "c3 <= (7/10) c1");
    // stays within the |log(1+t)| <= 2|t| zone for r >= 1.
    certify(compare_greater(u1 * u1 * Real(mpq_class(1, 2)), Real(mpq_class(7, 10))).is_true(),
            "relative error below 1/2");
    // dividing |Lambda| <= (14/10)(2+sqrt3)^{-2r} by log(3+sqrt8) >= 14/10.
    certify(compare_greater(log(v1), Real(mpq_class(14, 10))).is_true(), "log(3+sqrt8) >= 7/5");
    // (2+sqrt3)^2 >= 13, so 13 is a sound decay base.
    certify(compare_greater(u1 * u1, Real(13)).is_true(), "(2+sqrt3)^2 >= 13");
    // 13(2+sqrt3) <= 10(3+sqrt8) forces s <= r for r >= 1.
    certify(compare_greater(Real(10) * v1, Real(13) * u1).is_true(), "s <= r slope");
    // (7/5) e <= 13 makes |Lambda| < e^{-r}: the delta = 1 hypothesis.
    certify(compare_greater(Real(13), Real(mpq_class(7, 5)) * exp(Real(1))).is_true(),
            "|Lambda| < e^{-r} at r = 1");
}

}  // namespace

std::vector<QuadrupleReport::EqyEntry> eqy_sequence(size_t count) {
    std::vector<QuadrupleReport::EqyEntry> out;
    mpz_class y = 1, x = 1;  // (1 + sqrt3) (2 + sqrt3)^r
    for (size_t r = 0; r < count; ++r) {
        out.push_back({static_cast<long>(r), x, y});
        mpz_class y2 = 2 * y + 3 * x;
        mpz_class x2 = y + 2 * x;
        y = y2;
        x = x2;
    }
    return out;
}

std::vector<QuadrupleReport::EqzEntry> eqz_sequence(size_t count, int family) {
    if (family != 1 && family != 2) throw InvalidParameters("eqz family must be 1 or 2");
    std::vector<QuadrupleReport::EqzEntry> out;
    mpz_class z = family == 1 ? 1 : -1, x = 1;  // (+-1 + sqrt8) (3 + sqrt8)^s
    for (size_t s = 0; s < count; ++s) {
        out.push_back({static_cast<long>(s), x, z, family});
        mpz_class z2 = 3 * z + 8 * x;
        mpz_class x2 = z + 3 * x;
        z = z2;
        x = x2;
    }
    return out;
}

QuadrupleReport solve_quadruple(mpfr_prec_t max_prec) {
    if (max_prec == 0) max_prec = default_precision_ceiling();
    QuadrupleReport rep;
    rep.eqy = eqy_sequence(8);
    rep.eqz = eqz_sequence(8, 1);
    auto fam2 = eqz_sequence(8, 2);
    rep.eqz.insert(rep.eqz.end(), fam2.begin(), fam2.end());

    certify_pipeline_constants();

    // Exact heights of the three logarithm arguments.
    QF alpha1{2, 0, 1, 0};                       // 2 + sqrt3
    QF alpha2{3, 2, 0, 0};                       // 3 + 2 sqrt2
    QF s3{0, 0, 1, 0}, s8{0, 2, 0, 0}, one{1, 0, 0, 0};
    QF alpha3 = s3 * (one + s8) * (s8 * (one + s3)).inverse();
    QF alpha3b = s3 * (s8 - one) * (s8 * (one + s3)).inverse();
    mpz_class h1 = poly_height(min_poly_int(alpha1));
    mpz_class h2 = poly_height(min_poly_int(alpha2));
    mpz_class h3 = poly_height(min_poly_int(alpha3));
    mpz_class h3b = poly_height(min_poly_int(alpha3b));

    Real ln_a2 = log(Real(3) + sqrt(Real(8)));
    Real theta = log(Real(2) + sqrt(Real(3))) / ln_a2;
    Real a3_real = sqrt(Real(3)) * (Real(1) + sqrt(Real(8))) /
                   (sqrt(Real(8)) * (Real(1) + sqrt(Real(3))));
    Real a3b_real = sqrt(Real(3)) * (sqrt(Real(8)) - Real(1)) /
                    (sqrt(Real(8)) * (Real(1) + sqrt(Real(3))));
    Real phi1 = -log(a3_real) / ln_a2;
    Real phi2 = -log(a3b_real) / ln_a2;

    auto describe = [&](const mpz_class& h3x, const char* a3s) {
        QuadrupleReport::LinearForm f;
        f.alpha1 = "2 + sqrt(3)";
        f.alpha2 = "3 + sqrt(8)";
        f.alpha3 = a3s;
        f.height1 = h1;
        f.height2 = h2;
        f.height3 = h3x;
        f.coefficients = "b1 = r, b2 = -s, b3 = -1";
        f.mult = 1;
        f.base = 13;
        f.valid_from_r = 1;
        return f;
    };
    rep.form_family1 = describe(h3, "sqrt(3)*(1 + sqrt(8))/(sqrt(8)*(1 + sqrt(3)))");
    rep.form_family2 = describe(h3b, "sqrt(3)*(sqrt(8) - 1)/(sqrt(8)*(1 + sqrt(3)))");

    // Initial bound: n = 3 logarithms, delta = 1, d = 4 (alpha3 is quartic),
    // A = max height; H = max(r, s, 1) = r in the certified range.
    logforms::BoundRequest req;
    req.n = 3;
    req.degree = 4;
    req.delta = 1;
    mpz_class big_h = std::max(std::max(h1, h2), std::max(h3, h3b));
    req.heights = {Real(mpq_class(big_h))};
    rep.initial_bound = logforms::bound_lf4(req);
    mpz_class t = certified_ceil(rep.initial_bound.log10_bound);
    rep.initial_bound_log10 = mpq_class(t);

    // Reduce both families.
    reduction::ReductionProblem prob1;
    prob1.theta = theta;
    prob1.phi = phi1;
    prob1.mult = 1;
    prob1.base = 13;
    prob1.bound_log10 = mpq_class(t);
    reduction::ReductionProblem prob2 = prob1;
    prob2.phi = phi2;
    rep.problem_family1 = prob1;
    rep.problem_family2 = prob2;

    rep.reduction_family1 = reduction::reduce_to_fixpoint(prob1, {}, max_prec);
    rep.reduction_family2 = reduction::reduce_to_fixpoint(prob2, {}, max_prec);
    rep.final_bound = std::max(rep.reduction_family1.final_bound,
                               rep.reduction_family2.final_bound);
    if (!rep.final_bound.fits_slong_p()) {
        throw PrecisionExhausted("reduced bound still astronomically large");
    }

    // Exhaustive check of every surviving r (and the small-index region the
    // derived inequality does not cover, r = 0 included).
    long rmax = std::max(mpz_get_si(rep.final_bound.get_mpz_t()), 8L);
    auto ys = eqy_sequence(static_cast<size_t>(rmax) + 1);
    mpz_class max_x = ys.back().x;
    std::set<mpz_class> fam_x[2];
    for (int fam : {1, 2}) {
        mpz_class z = fam == 1 ? 1 : -1, x = 1;
        long s = 0;
        std::vector<std::pair<mpz_class, long>> seq;
        while (x <= max_x) {
            fam_x[fam - 1].insert(x);
            seq.emplace_back(x, s);
            mpz_class z2 = 3 * z + 8 * x;
            mpz_class x2 = z + 3 * x;
            z = z2;
            x = x2;
            ++s;
        }
        for (const auto& e : ys) {
            auto it = std::find_if(seq.begin(), seq.end(),
                                   [&](const auto& p) { return p.first == e.x; });
            if (it != seq.end()) {
                rep.matches.push_back({e.r, e.x, e.x * e.x - 1, fam, it->second});
            }
        }
    }
    std::sort(rep.matches.begin(), rep.matches.end(),
              [](const auto& a, const auto& b) { return a.r < b.r || (a.r == b.r && a.family < b.family); });

    rep.no_fifth_element = std::all_of(rep.matches.begin(), rep.matches.end(),
                                       [](const auto& m) { return m.n <= 120; });
    return rep;
}

}  // namespace solvers
}  // namespace dioph
