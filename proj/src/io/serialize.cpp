#include "dioph/io/serialize.hpp"

#include <fstream>

#include "dioph/errors.hpp"

namespace dioph {
namespace io {

namespace {

std::string rat_str(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

mpq_class rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    return q;
}

json pair_list(const std::vector<std::pair<mpz_class, mpz_class>>& v) {
    json out = json::array();
    for (const auto& [x, y] : v) out.push_back({x.get_str(), y.get_str()});
    return out;
}

}  // namespace

json to_json(const Interval& iv) {
    return json{{"lo", iv.dyadic_lo()}, {"hi", iv.dyadic_hi()}};
}

json to_json(const Real& r) {
    json j = to_json(r.enc());
    j["approx"] = r.enc().str(20);
    return j;
}

json to_json(const cf::ContinuedFraction& cf) {
    json quotients = json::array();
    for (const auto& a : cf.quotients) {
        if (a.fits_slong_p()) {
            quotients.push_back(mpz_get_si(a.get_mpz_t()));
        } else {
            quotients.push_back(a.get_str());
        }
    }
    json convergents = json::array();
    for (const auto& c : cf.convergents) {
        convergents.push_back({c.p.get_str(), c.q.get_str()});
    }
    return json{{"quotients", quotients},
                {"convergents", convergents},
                {"terminated", cf.terminated}};
}

json to_json(const cf::PellSolution& p) {
    return json{{"d", p.d.get_str()},
                {"x", p.x.get_str()},
                {"y", p.y.get_str()},
                {"fundamental", p.fundamental}};
}

json to_json(const logforms::BoundResult& b) {
    json j{{"formula", b.formula},
           {b.double_log ? "log10_log10_bound" : "log10_bound", to_json(b.log10_bound)}};
    if (!b.notes.empty()) j["notes"] = b.notes;
    return j;
}

json to_json(const reduction::ReductionProblem& p) {
    return json{{"theta", p.theta.expr()->to_string()},
                {"phi", p.phi.expr()->to_string()},
                {"mult", rat_str(p.mult)},
                {"base", rat_str(p.base)},
                {"log10_bound", rat_str(p.bound_log10)}};
}

json to_json(const reduction::ReductionCertificate& c) {
    return json{{"q", c.q.get_str()},
                {"K", c.K.get_str()},
                {"q_theta_dist", to_json(c.q_theta_dist)},
                {"q_phi_dist", to_json(c.q_phi_dist)},
                {"old_bound_log10", rat_str(c.old_bound_log10)},
                {"new_bound", c.new_bound.get_str()}};
}

json to_json(const reduction::FixpointResult& f, const reduction::ReductionProblem& p) {
    json chain = json::array();
    for (const auto& c : f.chain) chain.push_back(to_json(c));
    return json{{"type", "reduction-chain"},
                {"problem", to_json(p)},
                {"chain", chain},
                {"final_bound", f.final_bound.get_str()}};
}

reduction::ReductionProblem problem_from_json(const json& j) {
    reduction::ReductionProblem p;
    p.theta = Real::parse(j.at("theta").get<std::string>());
    p.phi = Real::parse(j.at("phi").get<std::string>());
    p.mult = rat_parse(j.at("mult").get<std::string>());
    p.base = rat_parse(j.at("base").get<std::string>());
    p.bound_log10 = rat_parse(j.at("log10_bound").get<std::string>());
    return p;
}

reduction::ReductionCertificate certificate_from_json(const json& j) {
    reduction::ReductionCertificate c;
    c.q = mpz_class(j.at("q").get<std::string>());
    c.K = mpz_class(j.at("K").get<std::string>());
    auto iv = [](const json& e) {
        return Interval::from_dyadic(e.at("lo").get<std::string>(),
                                     e.at("hi").get<std::string>());
    };
    c.q_theta_dist = iv(j.at("q_theta_dist"));
    c.q_phi_dist = iv(j.at("q_phi_dist"));
    c.old_bound_log10 = rat_parse(j.at("old_bound_log10").get<std::string>());
    c.new_bound = mpz_class(j.at("new_bound").get<std::string>());
    return c;
}

json to_json(const solvers::SqubeList& s) {
    json values = json::array();
    for (const auto& v : s.values) values.push_back(v.get_str());
    json gaps = json::array();
    for (const auto& g : s.gaps()) {
        gaps.push_back({{"from", g.from.get_str()},
                        {"to", g.to.get_str()},
                        {"gap", g.size.get_str()}});
    }
    return json{{"values", values}, {"gaps", gaps}};
}

json to_json(const solvers::MordellSolutionSet& m) {
    return json{{"k", m.k.get_str()},
                {"search_bound", m.search_bound.get_str()},
                {"solutions", pair_list(m.solutions)},
                {"complete", m.complete},
                {"proven_bound", to_json(m.proven_bound)}};
}

json to_json(const solvers::ThueSolutionSet& t) {
    return json{{"m", t.m.get_str()},
                {"solutions", pair_list(t.solutions)},
                {"method", t.method},
                {"brute_cutoff", t.brute_cutoff.get_str()},
                {"bound_log10_upper", rat_str(t.bound_log10)},
                {"convergents_tested", t.convergents_tested}};
}

json to_json(const solvers::ExpGapResult& e) {
    json sols = json::array();
    for (const auto& [r, s] : e.solutions) sols.push_back({r, s});
    json fallback = json::array();
    for (const auto& [r, s] : e.certificate.fallback_candidates) fallback.push_back({r, s});
    return json{{"type", "expgap"},
                {"a", e.a.get_str()},
                {"b", e.b.get_str()},
                {"m", e.m.get_str()},
                {"solutions", sols},
                {"certificate",
                 {{"baker_bound_log10", rat_str(e.certificate.baker_bound_log10)},
                  {"delta", rat_str(e.certificate.delta)},
                  {"s1", e.certificate.s1},
                  {"r1", e.certificate.r1},
                  {"convergents_refuted", e.certificate.convergents_refuted},
                  {"fallback_candidates", fallback}}}};
}

json to_json(const solvers::QuadrupleReport& q) {
    json eqy = json::array();
    for (const auto& e : q.eqy) {
        eqy.push_back({{"r", e.r}, {"x", e.x.get_str()}, {"y", e.y.get_str()}});
    }
    json eqz = json::array();
    for (const auto& e : q.eqz) {
        eqz.push_back({{"s", e.s}, {"x", e.x.get_str()}, {"z", e.z.get_str()}, {"family", e.family}});
    }
    auto form = [](const solvers::QuadrupleReport::LinearForm& f) {
        return json{{"alpha1", f.alpha1},
                    {"alpha2", f.alpha2},
                    {"alpha3", f.alpha3},
                    {"heights", {f.height1.get_str(), f.height2.get_str(), f.height3.get_str()}},
                    {"coefficients", f.coefficients},
                    {"mult", rat_str(f.mult)},
                    {"base", rat_str(f.base)},
                    {"valid_from_r", f.valid_from_r}};
    };
    json matches = json::array();
    for (const auto& m : q.matches) {
        matches.push_back({{"r", m.r},
                           {"x", m.x.get_str()},
                           {"N", m.n.get_str()},
                           {"family", m.family},
                           {"s", m.s}});
    }
    return json{{"type", "quadruple"},
                {"eqy", eqy},
                {"eqz", eqz},
                {"linear_form_family1", form(q.form_family1)},
                {"linear_form_family2", form(q.form_family2)},
                {"initial_bound", to_json(q.initial_bound)},
                {"initial_bound_log10_digits", rat_str(q.initial_bound_log10)},
                {"reduction_family1", to_json(q.reduction_family1, q.problem_family1)},
                {"reduction_family2", to_json(q.reduction_family2, q.problem_family2)},
                {"final_bound", q.final_bound.get_str()},
                {"matches", matches},
                {"conclusion", q.no_fifth_element ? "no_fifth_element" : "extension_found"}};
}

json to_json(const pade::PadePair& p) {
    json b = json::array(), a = json::array();
    for (const auto& x : p.b) b.push_back(rat_str(x));
    for (const auto& x : p.a) a.push_back(rat_str(x));
    return json{{"r", p.r}, {"B", b}, {"A", a}};
}

json to_json(const pade::MeasureCheck& m) {
    return json{{"holds", to_string(m.holds)},
                {"worst_convergent", {m.worst.p.get_str(), m.worst.q.get_str()}},
                {"slack_log10_lower", rat_str(m.slack_log10_lower)},
                {"convergents_checked", m.convergents_checked}};
}

json to_json(const classnum::FormClassCount& f) {
    return json{{"d", f.d.get_str()},
                {"discriminant", f.discriminant.get_str()},
                {"h", f.h}};
}

json to_json(const classnum::NearInteger& n) {
    return json{{"integer_part", n.integer_part},
                {"fractional_digits", n.fractional_digits},
                {"enclosure", to_json(n.value.enc())}};
}

json to_json(const abc::AbcTriple& t) {
    return json{{"a", t.a.get_str()},
                {"b", t.b.get_str()},
                {"c", t.c.get_str()},
                {"S", t.S.get_str()},
                {"s", t.s},
                {"max", t.max_abs.get_str()},
                {"quality", to_json(t.quality)}};
}

json to_json(const abc::RefinementCheck& r) {
    return json{{"holds", to_string(r.holds)},
                {"rhs", to_json(r.rhs)},
                {"slack", to_json(r.slack)}};
}

json to_json(const abc::ScanReport& s) {
    auto entry = [](const abc::ScanEntry& e) {
        return json{{"a", e.a},     {"b", e.b},
                    {"c", e.c},     {"radical", e.radical},
                    {"s", e.s},     {"quality", e.quality}};
    };
    json top = json::array(), failures = json::array();
    for (const auto& e : s.top_quality) top.push_back(entry(e));
    for (const auto& e : s.refinement_failures) failures.push_back(entry(e));
    return json{{"max_c", s.max_c},
                {"c0", rat_str(s.c0)},
                {"triples", s.triples},
                {"top_quality", top},
                {"refinement_failures", failures}};
}

json to_json(const abc::WaringReport& w) {
    return json{{"k_max", w.k_max},
                {"violations", w.violations},
                {"formula_threats", w.formula_threats}};
}

void save_certificate(const json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write certificate file: " + path);
    out << report.dump(2) << "\n";
}

namespace {

bool verify_chain(const json& j, std::string& summary) {
    auto prob = problem_from_json(j.at("problem"));
    mpq_class expected_old = prob.bound_log10;
    mpz_class last_new = -1;
    size_t idx = 0;
    for (const auto& cj : j.at("chain")) {
        auto cert = certificate_from_json(cj);
        if (cert.old_bound_log10 != expected_old) {
            summary = "certificate " + std::to_string(idx) + " does not chain from the previous bound";
            return false;
        }
        std::string why;
        reduction::ReductionProblem step = prob;
        step.bound_log10 = cert.old_bound_log10;
        if (!reduction::verify_certificate(step, cert, &why)) {
            summary = "certificate " + std::to_string(idx) + ": " + why;
            return false;
        }
        last_new = cert.new_bound;
        // next round starts from the digit count of new_bound
        std::string digits = cert.new_bound.get_str();
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits.size() - 1);
        expected_old = mpq_class(static_cast<long>(
            pow10 == cert.new_bound ? digits.size() - 1 : digits.size()));
        ++idx;
    }
    if (last_new >= 0 && j.contains("final_bound") &&
        mpz_class(j.at("final_bound").get<std::string>()) != last_new) {
        summary = "final_bound does not match the last certificate";
        return false;
    }
    summary = "verified " + std::to_string(idx) + " reduction step(s), final bound " +
              (last_new >= 0 ? last_new.get_str() : std::string("(none)"));
    return true;
}

}  // namespace

bool verify_certificate_file(const std::string& path, std::string& summary) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read certificate file: " + path);
    json j = json::parse(in);
    std::string type = j.value("type", "");
    if (type == "reduction-chain") {
        return verify_chain(j, summary);
    }
    if (type == "quadruple") {
        std::string s1, s2;
        if (!verify_chain(j.at("reduction_family1"), s1)) {
            summary = "family 1: " + s1;
            return false;
        }
        if (!verify_chain(j.at("reduction_family2"), s2)) {
            summary = "family 2: " + s2;
            return false;
        }
        // replay the exhaustive tail: regenerate sequences and matches
        auto fresh = solvers::solve_quadruple();
        bool conclusion_ok =
            j.at("conclusion").get<std::string>() ==
            (fresh.no_fifth_element ? "no_fifth_element" : "extension_found");
        if (!conclusion_ok) {
            summary = "stored conclusion differs from the replayed pipeline";
            return false;
        }
        summary = "family1 " + s1 + "; family2 " + s2 + "; exhaustive tail replayed";
        return true;
    }
    if (type == "expgap") {
        auto fresh = solvers::solve_exponential_gap(
            mpz_class(j.at("a").get<std::string>()), mpz_class(j.at("b").get<std::string>()),
            mpz_class(j.at("m").get<std::string>()));
        json fj = to_json(fresh);
        if (fj.at("solutions") != j.at("solutions")) {
            summary = "stored solutions differ from the replayed pipeline";
            return false;
        }
        summary = "replayed; " + std::to_string(fresh.solutions.size()) + " solution(s) confirmed";
        return true;
    }
    summary = "unknown certificate type: " + type;
    return false;
}

}  // namespace io
}  // namespace dioph
