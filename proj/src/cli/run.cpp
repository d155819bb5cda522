#include "dioph/cli/run.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <sstream>

#include "dioph/errors.hpp"
#include "dioph/io/serialize.hpp"
#include "dioph/support/parallel.hpp"

namespace dioph {
namespace cli {

namespace {

using io::json;

struct Options {
    std::string format = "text";
    long precision_ceiling = 0;
    unsigned parallelism = 1;
    std::string cert_dir;
    std::string config_file;
    bool allow_long = false;
};

mpq_class parse_rat(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    return q;
}

mpz_class parse_int(const std::string& s) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer: " + s);
    return z;
}

void apply_config(Options& opt) {
    if (!opt.config_file.empty()) {
        std::ifstream in(opt.config_file);
        if (!in) throw InvalidParameters("cannot read config file: " + opt.config_file);
        std::string line;
        while (std::getline(in, line)) {
            auto eq = line.find('=');
            if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            if (key == "precision_ceiling_bits" && opt.precision_ceiling == 0) {
                opt.precision_ceiling = std::stol(val);
            } else if (key == "parallelism" && opt.parallelism == 1) {
                opt.parallelism = static_cast<unsigned>(std::stoul(val));
            } else if (key == "format" && opt.format == "text") {
                opt.format = val;
            } else if (key == "certificate_dir" && opt.cert_dir.empty()) {
                opt.cert_dir = val;
            }
        }
    }
    if (opt.precision_ceiling == 0) {
        if (const char* env = std::getenv("DIOPH_PRECISION_CEILING")) {
            opt.precision_ceiling = std::stol(env);
        }
    }
    if (opt.precision_ceiling != 0) set_default_precision_ceiling(opt.precision_ceiling);
    set_default_parallelism(opt.parallelism);
}

void require_long(const Options& opt, const std::string& what) {
    if (!opt.allow_long) {
        throw InvalidParameters(what + " is a long-running search; pass --allow-long to run it");
    }
}

// ---- text renderers (JSON is the primary machine surface) ----

std::string text_of(const json& j, int indent = 0) {
    std::ostringstream os;
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n" << text_of(it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << (it.value().is_string()
                                                      ? it.value().get<std::string>()
                                                      : it.value().dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || e.is_array()) {
                os << pad << "-\n" << text_of(e, indent + 2);
            } else {
                os << pad << "- "
                   << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
    return os.str();
}

std::string csv_of_scan(const abc::ScanReport& rep) {
    std::ostringstream os;
    os << "kind,a,b,c,radical,s,quality\n";
    for (const auto& e : rep.top_quality) {
        os << "top," << e.a << "," << e.b << "," << e.c << "," << e.radical << "," << e.s << ","
           << e.quality << "\n";
    }
    for (const auto& e : rep.refinement_failures) {
        os << "failure," << e.a << "," << e.b << "," << e.c << "," << e.radical << "," << e.s
           << "," << e.quality << "\n";
    }
    return os.str();
}

std::string csv_of_waring(const abc::WaringReport& rep) {
    std::ostringstream os;
    os << "k,distance_violation,formula_threat\n";
    for (auto k : rep.violations) {
        bool threat = std::find(rep.formula_threats.begin(), rep.formula_threats.end(), k) !=
                      rep.formula_threats.end();
        os << k << ",1," << (threat ? 1 : 0) << "\n";
    }
    return os.str();
}

void emit(const Options& opt, const json& j, std::string& out) {
    if (opt.format == "json") {
        out = j.dump(2) + "\n";
    } else {
        out = text_of(j);
    }
}

void maybe_save(const Options& opt, const std::string& path, const json& j) {
    if (path.empty()) return;
    std::string full = path;
    if (!opt.cert_dir.empty() && path.find('/') == std::string::npos) {
        full = opt.cert_dir + "/" + path;
    }
    io::save_certificate(j, full);
}

}  // namespace

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"certified solvers for classical Diophantine problems"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json (csv for abc scan/waring)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--precision-ceiling-bits", opt.precision_ceiling,
                   "working precision ceiling in bits (default 2^20; env DIOPH_PRECISION_CEILING)");
    app.add_option("-j,--parallelism", opt.parallelism, "worker threads for searches");
    app.add_option("--cert-dir", opt.cert_dir, "directory for saved certificates");
    app.add_option("--config", opt.config_file, "key=value config file");
    app.add_flag("--allow-long", opt.allow_long, "permit long-running searches");

    // ---- cf ----
    auto* cf_cmd = app.add_subcommand("cf", "continued fractions and Pell equations");
    cf_cmd->require_subcommand(1);
    std::string cf_expr;
    long cf_count = 10;
    auto* cf_expand = cf_cmd->add_subcommand(
        "expand", "partial quotients a0;a1,... and convergents p_i/q_i of an expression");
    cf_expand->add_option("expr", cf_expr, "expression, e.g. \"355/113\" or \"pi\"")->required();
    cf_expand->add_option("--count", cf_count, "number of quotients");
    std::string pell_d;
    auto* cf_pell = cf_cmd->add_subcommand(
        "pell", "fundamental solution of x^2 - d y^2 = 1 from the expansion of sqrt(d)");
    cf_pell->add_option("d", pell_d, "positive non-square d")->required();
    std::string conv_expr;
    unsigned conv_log10 = 10;
    auto* cf_conv = cf_cmd->add_subcommand("convergents",
                                           "all convergents with q <= 10^L");
    cf_conv->add_option("expr", conv_expr)->required();
    cf_conv->add_option("--qmax-log10", conv_log10, "L");
    std::string dir_expr, dir_q;
    auto* cf_dir = cf_cmd->add_subcommand(
        "dirichlet", "p/q with q <= Q and |q x - p| <= 1/Q (box-principle quality)");
    cf_dir->add_option("expr", dir_expr)->required();
    cf_dir->add_option("-Q,--limit", dir_q, "denominator bound")->required();

    // ---- bound ----
    auto* bound_cmd = app.add_subcommand(
        "bound", "explicit bound formulas for linear forms in logarithms");
    bound_cmd->require_subcommand(1);
    unsigned b_n = 2, b_degree = 4, b_field_degree = 1;
    std::string b_delta = "1", b_coeff = "4";
    std::vector<std::string> b_heights;
    bool b_inhom = false;
    auto add_common = [&](CLI::App* c, bool with_delta, bool with_d, bool with_cap_d,
                          bool with_b) {
        c->add_option("-n,--logs", b_n, "number of logarithms");
        if (with_delta) c->add_option("--delta", b_delta, "decay rate, 0 < delta <= 1");
        if (with_d) c->add_option("-d,--degree", b_degree, "degree bound for the alphas (>= 4)");
        if (with_cap_d) c->add_option("-D,--field-degree", b_field_degree, "compositum degree");
        c->add_option("-A,--height", b_heights,
                      "height bound(s); one value or one per logarithm (expressions allowed)")
            ->required();
        if (with_b) c->add_option("-B,--coeff-height", b_coeff, "coefficient height bound");
    };
    auto* b_lf4 = bound_cmd->add_subcommand(
        "lf4", "H < (4^(n^2) delta^-1 d^(2n) log A)^((2n+1)^2) for 0 < |b1 log a1 + ... + "
               "bn log an| < e^(-delta H)");
    add_common(b_lf4, true, true, false, false);
    auto* b_rel = bound_cmd->add_subcommand(
        "rel", "height bound (4^(n^2) d^(2n) log A)^((2n+1)^2) for a vanishing integer "
               "combination of logarithms");
    add_common(b_rel, false, true, false, false);
    auto* b_s77 = bound_cmd->add_subcommand(
        "sharp77", "|Lambda| > (B Omega)^(-C0 Omega log Omega'), C0 = (16 n D)^(200 n)");
    add_common(b_s77, false, false, true, true);
    b_s77->add_flag("--inhomogeneous", b_inhom, "keep the beta0 term (drops to B^... otherwise)");
    auto* b_bw = bound_cmd->add_subcommand(
        "bw93", "|Lambda| > B^(-C1 Omega), C1 = (16 n D)^(2n+4), rational case");
    add_common(b_bw, false, false, true, true);
    std::string b_k, b_m;
    auto* b_mord = bound_cmd->add_subcommand(
        "mordell",
        "all |x|,|y| with y^2 = x^3 + k are below exp((10^10 |k|)^10000); reports log10 of "
        "the inner exponent");
    b_mord->add_option("-k", b_k, "nonzero k")->required();
    auto* b_thue = bound_cmd->add_subcommand(
        "thue-cubic", "all |x|,|y| with x^3 - 2y^3 = m are below (300000 |m|)^23");
    b_thue->add_option("-m", b_m, "nonzero m")->required();

    // ---- reduce ----
    auto* red_cmd = app.add_subcommand(
        "reduce", "collapse a bound R on r with |r theta - s + phi| < A C^-r to one "
                  "logarithmic in R, with a replayable certificate");
    std::string red_theta, red_phi, red_R, red_base = "2", red_mult = "1", red_K, red_save;
    red_cmd->add_option("--theta", red_theta, "irrational theta (expression)")->required();
    red_cmd->add_option("--phi", red_phi, "shift phi (expression)")->required();
    red_cmd->add_option("--log10-bound", red_R, "log10 of the starting bound R")->required();
    red_cmd->add_option("--base", red_base, "decay base C > 1");
    red_cmd->add_option("--mult", red_mult, "multiplier A >= 1");
    red_cmd->add_option("--K", red_K, "single round with this K (otherwise run to a fixpoint)");
    red_cmd->add_option("--save-cert", red_save, "write the certificate chain to this file");

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "end-to-end certified solvers");
    solve_cmd->require_subcommand(1);
    std::string s_k, s_bound = "10000", s_m, s_a, s_b, s_m2, s_limit, s_save;
    auto* s_mord = solve_cmd->add_subcommand(
        "mordell", "all y^2 = x^3 + k with |x| below a search bound (the proven bound "
                   "exp((10^10 |k|)^10000) is reported, not searched)");
    s_mord->add_option("-k", s_k)->required();
    s_mord->add_option("--bound", s_bound, "search |x| up to this");
    auto* s_thue = solve_cmd->add_subcommand(
        "thue-cubic",
        "complete solution set of x^3 - 2y^3 = m via brute force below a cutoff plus a "
        "convergent sweep of 2^(1/3) up to (300000 |m|)^23");
    s_thue->add_option("-m", s_m)->required();
    auto* s_gap = solve_cmd->add_subcommand(
        "expgap", "complete solution set of a^r - b^s = m, certified through an explicit "
                  "two-logarithm bound and a convergent sweep");
    s_gap->add_option("-a", s_a)->required();
    s_gap->add_option("-b", s_b)->required();
    s_gap->add_option("-m", s_m2)->required();
    s_gap->add_option("--save-cert", s_save);
    auto* s_quad = solve_cmd->add_subcommand(
        "quadruple",
        "proves {1,3,8,120} extends to no fifth element: Pell families y^2-3x^2=-2, "
        "z^2-8x^2=-7, a three-logarithm bound, reduction, and an exhaustive tail");
    s_quad->add_option("--save-cert", s_save);
    auto* s_squ = solve_cmd->add_subcommand(
        "squbes", "merged sorted squares and cubes with consecutive gaps");
    s_squ->add_option("--limit", s_limit, "largest value")->required();

    // ---- pade ----
    auto* pade_cmd = app.add_subcommand(
        "pade", "hypergeometric contact approximants to (1-x)^(1/3) and certified "
                "irrationality measures");
    pade_cmd->require_subcommand(1);
    unsigned pa_count = 5;
    auto* pa_appr = pade_cmd->add_subcommand(
        "approximants", "the rationals (5/4) B_r(3/128)/A_r(3/128) converging to 2^(1/3)");
    pa_appr->add_option("--count", pa_count);
    std::string pv_alpha, pv_c, pv_kappa, pv_qmax;
    auto* pa_ver = pade_cmd->add_subcommand(
        "verify", "check |alpha - p/q| > c/q^kappa on every convergent with q <= qmax");
    pa_ver->add_option("--alpha", pv_alpha)->required();
    pa_ver->add_option("--c", pv_c)->required();
    pa_ver->add_option("--kappa", pv_kappa)->required();
    pa_ver->add_option("--qmax", pv_qmax)->required();
    unsigned pa_r = 4;
    auto* pa_pair = pade_cmd->add_subcommand("pair", "the polynomial pair (A_r, B_r)");
    pa_pair->add_option("-r", pa_r);

    // ---- class ----
    auto* class_cmd = app.add_subcommand(
        "class", "imaginary quadratic class numbers via reduced binary quadratic forms");
    class_cmd->require_subcommand(1);
    std::string c_d, c_dmax = "10000", c_n;
    unsigned long c_h = 1;
    size_t c_digits = 36;
    auto* c_hcmd = class_cmd->add_subcommand("h", "class number of Q(sqrt(-d))");
    c_hcmd->add_option("-d", c_d)->required();
    auto* c_list = class_cmd->add_subcommand("list", "all squarefree d <= dmax with h(d) = H");
    c_list->set_help_flag("--help", "print help");  // frees -h/--h for the class number
    c_list->add_option("--h", c_h);
    c_list->add_option("--dmax", c_dmax);
    auto* c_ido = class_cmd->add_subcommand(
        "idoneal", "idoneal test: no distinct x < y < z with xy + yz + zx = n");
    c_ido->add_option("-n", c_n)->required();
    auto* c_e163 = class_cmd->add_subcommand(
        "e163", "certified digits of e^(pi sqrt(163)) = 262537412640768743.9999999999992...");
    c_e163->add_option("--digits", c_digits, "fractional digits");

    // ---- abc ----
    auto* abc_cmd = app.add_subcommand("abc", "abc triples, kernels and quality");
    abc_cmd->require_subcommand(1);
    std::string t_a, t_b, t_c, a_c0 = "6/5";
    unsigned long a_max = 1000;
    auto* a_triple = abc_cmd->add_subcommand(
        "triple", "kernel S, prime count s, quality log max/log S, and the refinement "
                  "check max <= C0 S (log S)^s / s!");
    a_triple->add_option("-a", t_a)->required();
    a_triple->add_option("-b", t_b)->required();
    a_triple->add_option("-c", t_c)->required();
    a_triple->add_option("--c0", a_c0);
    auto* a_scan = abc_cmd->add_subcommand(
        "scan", "exhaustive coprime a + b = c scan: top quality and refinement failures");
    a_scan->add_option("--max", a_max, "largest c");
    a_scan->add_option("--c0", a_c0);

    // ---- waring ----
    unsigned long w_kmax = 100;
    auto* waring_cmd = app.add_subcommand(
        "waring", "g(k) = 2^k + [(3/2)^k] - 2 with the exact-rational check "
                  "||(3/2)^k|| >= (3^k + 2^k)/(4^k - 2^k)");
    waring_cmd->add_option("--kmax", w_kmax)->required();

    // ---- verify ----
    std::string v_file;
    auto* verify_cmd = app.add_subcommand("verify", "replay a saved certificate file");
    verify_cmd->add_option("file", v_file)->required();

    // Global options may appear after a subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (auto* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        out = os.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        err = json{{"error", "InvalidParameters"}, {"message", e.what()}}.dump() + "\n";
        return 2;
    }

    try {
        apply_config(opt);
        json j;

        if (*cf_expand) {
            j = io::to_json(cf::expand(Real::parse(cf_expr), static_cast<size_t>(cf_count)));
        } else if (*cf_pell) {
            mpz_class d = parse_int(pell_d);
            if (d > 1000000000000L) require_long(opt, "pell with d > 10^12");
            j = io::to_json(cf::solve_pell(d));
        } else if (*cf_conv) {
            auto convs = cf::convergents_up_to(Real::parse(conv_expr), conv_log10);
            json arr = json::array();
            for (const auto& c : convs) arr.push_back({c.p.get_str(), c.q.get_str()});
            j = json{{"q_max_log10", conv_log10}, {"convergents", arr}};
        } else if (*cf_dir) {
            auto c = cf::dirichlet_approx(Real::parse(dir_expr), parse_int(dir_q));
            j = json{{"p", c.p.get_str()}, {"q", c.q.get_str()}};
        } else if (*b_lf4 || *b_rel || *b_s77 || *b_bw) {
            logforms::BoundRequest req;
            req.n = b_n;
            req.degree = b_degree;
            req.field_degree = b_field_degree;
            req.delta = parse_rat(b_delta);
            req.coeff_height = parse_int(b_coeff);
            for (const auto& h : b_heights) req.heights.push_back(Real::parse(h));
            logforms::BoundResult res;
            if (*b_lf4) {
                res = logforms::bound_lf4(req);
            } else if (*b_rel) {
                res = logforms::bound_dependence_relation(req);
            } else if (*b_s77) {
                res = logforms::bound_sharp77(req, b_inhom);
            } else {
                res = logforms::bound_bw93(req);
            }
            j = io::to_json(res);
            j["inputs"] = json{{"n", req.n},
                               {"degree", req.degree},
                               {"field_degree", req.field_degree},
                               {"delta", b_delta},
                               {"heights", b_heights},
                               {"coeff_height", b_coeff}};
        } else if (*b_mord) {
            auto res = logforms::bound_mordell(parse_int(b_k));
            j = io::to_json(res);
            j["log10_log10_bound_rounded"] = certified_round(res.log10_bound).get_str();
            j["inputs"] = json{{"k", b_k}};
        } else if (*b_thue) {
            auto res = logforms::bound_thue_cubic(parse_int(b_m));
            j = io::to_json(res);
            j["inputs"] = json{{"m", b_m}};
        } else if (*red_cmd) {
            reduction::ReductionProblem prob;
            prob.theta = Real::parse(red_theta);
            prob.phi = Real::parse(red_phi);
            prob.bound_log10 = parse_rat(red_R);
            prob.base = parse_rat(red_base);
            prob.mult = parse_rat(red_mult);
            if (!red_K.empty()) {
                auto outc = reduction::reduce_once(prob, parse_int(red_K));
                if (outc.status != reduction::ReduceStatus::Success) {
                    err = json{{"error", "SmallQPhi"}, {"message", outc.detail}}.dump() + "\n";
                    return 2;
                }
                reduction::FixpointResult fr;
                fr.final_bound = outc.certificate->new_bound;
                fr.chain.push_back(*outc.certificate);
                j = io::to_json(fr, prob);
            } else {
                auto fr = reduction::reduce_to_fixpoint(prob);
                j = io::to_json(fr, prob);
            }
            maybe_save(opt, red_save, j);
        } else if (*s_mord) {
            mpz_class bound = parse_int(s_bound);
            if (bound > 1000000) require_long(opt, "mordell search beyond 10^6");
            j = io::to_json(solvers::solve_mordell(parse_int(s_k), bound, opt.parallelism));
        } else if (*s_thue) {
            j = io::to_json(solvers::solve_thue_cubic(parse_int(s_m)));
        } else if (*s_gap) {
            auto res = solvers::solve_exponential_gap(parse_int(s_a), parse_int(s_b),
                                                      parse_int(s_m2));
            j = io::to_json(res);
            maybe_save(opt, s_save, j);
        } else if (*s_quad) {
            auto res = solvers::solve_quadruple();
            j = io::to_json(res);
            maybe_save(opt, s_save, j);
        } else if (*s_squ) {
            mpz_class limit = parse_int(s_limit);
            if (limit > mpz_class("100000000000000")) require_long(opt, "squbes beyond 10^14");
            j = io::to_json(solvers::squbes(limit));
        } else if (*pa_appr) {
            auto ws = pade::approximants_to_cube_root2(pa_count);
            json arr = json::array();
            for (const auto& w : ws) arr.push_back(w.get_str());
            j = json{{"approximants", arr}};
        } else if (*pa_ver) {
            j = io::to_json(pade::verify_effective_measure(Real::parse(pv_alpha),
                                                           parse_rat(pv_c), parse_rat(pv_kappa),
                                                           parse_int(pv_qmax)));
        } else if (*pa_pair) {
            j = io::to_json(pade::pade_coefficients(pa_r));
        } else if (*c_hcmd) {
            j = io::to_json(classnum::class_number(parse_int(c_d)));
        } else if (*c_list) {
            auto ds = classnum::gauss_list(c_h, parse_int(c_dmax), opt.parallelism);
            json arr = json::array();
            for (const auto& d : ds) arr.push_back(d.get_str());
            j = json{{"h", c_h}, {"d_max", c_dmax}, {"d", arr}};
        } else if (*c_ido) {
            auto res = classnum::is_idoneal(mpz_get_ui(parse_int(c_n).get_mpz_t()));
            j = json{{"n", c_n}, {"idoneal", res.idoneal}};
            if (!res.idoneal) {
                j["witness"] = {res.x, res.y, res.z};
            }
        } else if (*c_e163) {
            j = io::to_json(classnum::near_integer_163(c_digits));
        } else if (*a_triple) {
            auto t = abc::analyze_triple(parse_int(t_a), parse_int(t_b), parse_int(t_c));
            j = io::to_json(t);
            j["refinement"] = io::to_json(abc::check_baker_refinement(t, parse_rat(a_c0)));
        } else if (*a_scan) {
            if (a_max > 20000) require_long(opt, "abc scan beyond c = 20000");
            auto rep = abc::scan_triples(a_max, parse_rat(a_c0), opt.parallelism);
            if (opt.format == "csv") {
                out = csv_of_scan(rep);
                return 0;
            }
            j = io::to_json(rep);
        } else if (*waring_cmd) {
            if (w_kmax > 200000) require_long(opt, "waring beyond k = 200000");
            auto rep = abc::waring_check(w_kmax);
            if (opt.format == "csv") {
                out = csv_of_waring(rep);
                return 0;
            }
            j = io::to_json(rep);
            j["g"] = json::array();
            for (unsigned long k = 1; k <= std::min<unsigned long>(w_kmax, 20); ++k) {
                j["g"].push_back({{"k", k}, {"value", abc::waring_g(k).get_str()}});
            }
        } else if (*verify_cmd) {
            std::string summary;
            bool ok = io::verify_certificate_file(v_file, summary);
            j = json{{"verified", ok}, {"summary", summary}};
            emit(opt, j, out);
            return ok ? 0 : 1;
        }

        emit(opt, j, out);
        return 0;
    } catch (const PrecisionExhausted& e) {
        err = json{{"error", "PrecisionExhausted"}, {"message", e.what()}}.dump() + "\n";
        return 3;
    } catch (const InvalidParameters& e) {
        err = json{{"error", "InvalidParameters"}, {"message", e.what()}}.dump() + "\n";
        return 2;
    } catch (const Error& e) {
        err = json{{"error", "Error"}, {"message", e.what()}}.dump() + "\n";
        return 1;
    } catch (const std::exception& e) {
        err = json{{"error", "Internal"}, {"message", e.what()}}.dump() + "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace dioph
