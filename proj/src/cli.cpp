#include "diaglab/cli.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "diaglab/classify.hpp"
#include "diaglab/exponent.hpp"
#include "diaglab/ideals.hpp"
#include "diaglab/matrix.hpp"
#include "diaglab/multilinear.hpp"
#include "diaglab/norms.hpp"

namespace diaglab {

using nlohmann::ordered_json;

std::vector<double> parse_alpha(const std::string& text, std::size_t nmax) {
    std::vector<double> out;
    if (text.rfind("pow:", 0) == 0) {
        const Rational s = parse_rational(std::string_view(text).substr(4));
        if (s < 0) throw std::invalid_argument("pow:s needs s >= 0");
        if (nmax == 0) throw std::invalid_argument("pow:s needs --nmax >= 1");
        const double sd = to_double(s);
        for (std::size_t k = 1; k <= nmax; ++k) out.push_back(std::pow(static_cast<double>(k), -sd));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in alpha list");
        out.push_back(to_double(parse_rational(item)));
    }
    if (out.empty()) throw std::invalid_argument("alpha list is empty");
    return out;
}

namespace {

struct Args {
    std::string format = "text";
    std::uint64_t seed = default_seed;
    bool timing = false;

    std::string p, q;
    int n = 0;
    bool forms = false;

    std::string ideal;
    std::string alpha;
    std::size_t nmax = 16384;

    std::string kind;
    std::size_t dim = 0;
    std::string field = "real";
    std::vector<std::string> p_rest;

    std::string identity;
    int trials = 100;
    std::optional<double> tol;

    std::string s;
};

DiagonalOperator make_operator(const Args& a) {
    DiagonalOperator op;
    op.arity = a.n;
    op.p = Exponent::parse(a.p);
    op.q = Exponent::parse(a.q);
    for (double v : parse_alpha(a.alpha, a.nmax)) op.alpha.emplace_back(v);
    return op;
}

WalshMatrix walsh_for(std::size_t dim, Field field) {
    return field == Field::real ? hadamard(dim) : fourier(dim);
}

ordered_json operator_params(const Args& a) {
    return {{"p", a.p}, {"q", a.q}, {"n", a.n}};
}

int run_classify(const Args& a, Report& r) {
    const Exponent p = Exponent::parse(a.p);
    r.params = {{"p", a.p}, {"n", a.n}, {"forms", a.forms}};
    Classification c;
    if (a.forms) {
        c = classify_forms(p, a.n);
    } else {
        if (a.q.empty()) throw std::invalid_argument("classify needs --q unless --forms is given");
        r.params["q"] = a.q;
        c = classify_operators(p, Exponent::parse(a.q), a.n);
    }
    r.results.push_back({{"type", "classification"}, {"classification", to_json(c)}});
    return exit_ok;
}

int run_norm(const Args& a, Report& r) {
    const DiagonalOperator op = make_operator(a);
    r.params = operator_params(a);
    r.params["ideal"] = a.ideal;
    r.params["alpha"] = a.alpha;
    if (a.alpha.rfind("pow:", 0) == 0) r.params["nmax"] = a.nmax;

    NormCertificate cert;
    if (a.ideal == "L") {
        cert = diagonal_norm_exact(op);
    } else {
        const NuclearIntegral ni = nuclear_integral_exact(op);
        cert = a.ideal == "N" ? ni.nuclear : ni.integral;
    }
    r.results.push_back({{"type", "norm"},
                         {"ideal", a.ideal},
                         {"p", a.p},
                         {"q", a.q},
                         {"n", a.n},
                         {"certificate", to_json(cert)}});
    return exit_ok;
}

int run_certify(const Args& a, Report& r) {
    r.params = {{"kind", a.kind}};
    if (a.kind == "phi-bound") {
        if (a.dim == 0) throw std::invalid_argument("phi-bound needs --N");
        const Field field = parse_field(a.field);
        std::vector<Exponent> rest;
        for (const auto& e : a.p_rest) rest.push_back(Exponent::parse(e));
        if (rest.empty() && a.n >= 3) rest.assign(static_cast<std::size_t>(a.n - 2), Exponent::infinity());
        if (static_cast<int>(rest.size()) + 2 != a.n) {
            throw std::invalid_argument("--p-rest needs n - 2 exponents");
        }
        AscentOptions opts;
        opts.seed = r.seed;
        const PhiCertificate c = phi_extendibility_certificate(a.dim, a.n, rest, field, opts);
        r.params["N"] = a.dim;
        r.params["n"] = a.n;
        r.params["field"] = a.field;
        ordered_json pr = ordered_json::array();
        for (const auto& e : rest) pr.push_back(e.to_string());
        r.params["p_rest"] = pr;
        r.results.push_back({{"type", "phi-bound"}, {"certificate", to_json(c)}});
        return c.l_norm.consistent ? exit_ok : exit_verification_failed;
    }

    if (a.kind == "ext-upper-sqrt") {
        const Exponent p = Exponent::parse(a.p);
        std::vector<Scalar> alpha;
        for (double v : parse_alpha(a.alpha, a.nmax)) alpha.emplace_back(v);
        r.params["p"] = a.p;
        r.params["n"] = a.n;
        r.params["alpha"] = a.alpha;
        const FactorizationCertificate f = extendible_upper_sqrt(alpha, p, a.n);
        r.results.push_back({{"type", "factorization"}, {"certificate", to_json(f)}});
        return exit_ok;
    }

    const DiagonalOperator op = make_operator(a);
    r.params.update(operator_params(a));
    r.params["alpha"] = a.alpha;
    if (a.kind == "ext-upper-linf") {
        r.results.push_back({{"type", "certificate"}, {"certificate", to_json(extendible_upper_linfty(op))}});
    } else if (a.kind == "nuclear-factor") {
        r.results.push_back({{"type", "factorization"}, {"certificate", to_json(nuclear_upper_factorization(op))}});
    } else if (a.kind == "integral-dual") {
        r.results.push_back({{"type", "certificate"}, {"certificate", to_json(integral_lower_duality(op))}});
    } else if (a.kind == "ext-diagnostic") {
        r.results.push_back({{"type", "diagnostic"}, {"diagnostic", to_json(extendible_lower_diagnostic(op))}});
    } else {
        throw std::invalid_argument("unknown certificate kind '" + a.kind + "'");
    }
    return exit_ok;
}

ordered_json verify_result(const std::string& identity, bool pass, double residual, double tol) {
    return {{"type", "verify"}, {"identity", identity}, {"pass", pass}, {"residual", residual}, {"tolerance", tol}};
}

int run_verify(const Args& a, Report& r) {
    if (a.dim == 0) throw std::invalid_argument("verify needs --N");
    const Field field = parse_field(a.field);
    r.params = {{"identity", a.identity}, {"N", a.dim}, {"field", a.field}};
    const WalshMatrix w = walsh_for(a.dim, field);
    const double nd = static_cast<double>(a.dim);

    ordered_json res;
    bool pass = false;
    if (a.identity == "walsh") {
        const double tol = a.tol.value_or(1e-10 * nd);
        const WalshReport wr = verify_walsh(w, tol);
        pass = wr.pass;
        res = verify_result(a.identity, pass, wr.max_residual(), tol);
        res["unimodular_residual"] = wr.unimodular_residual;
        res["symmetry_residual"] = wr.symmetry_residual;
        res["orthogonality_residual"] = wr.orthogonality_residual;
    } else if (a.identity == "bh-norm") {
        const double tol = a.tol.value_or(1e-6);
        r.params["n"] = a.n;
        const DenseForm t = bh_form(w, a.n);
        NormCertificate cert;
        if (field == Field::real && static_cast<std::size_t>(a.n) * a.dim <= max_vertex_bits) {
            cert = vertex_bruteforce_norm(t);
        } else {
            AscentOptions opts;
            opts.seed = r.seed;
            std::vector<Exponent> slots(static_cast<std::size_t>(a.n), Exponent::infinity());
            cert = alternating_ascent_norm(t, slots, std::nullopt, opts);
        }
        const double target = nd * nd;
        const double residual = std::abs(target - cert.value) / target;
        pass = residual <= tol;
        res = verify_result(a.identity, pass, residual, tol);
        res["expected"] = target;
        res["certificate"] = to_json(cert);
    } else if (a.identity == "composition") {
        const double tol = a.tol.value_or(1e-9);
        r.params["n"] = a.n;
        r.params["trials"] = a.trials;
        const CompositionReport c = composition_identity_check(w, a.n, a.trials, tol, r.seed);
        pass = c.pass;
        res = verify_result(a.identity, pass, c.max_relative_residual, tol);
        res["trials"] = c.trials;
    } else {
        throw std::invalid_argument("unknown identity '" + a.identity + "'");
    }
    r.params["tolerance"] = res["tolerance"];
    r.results.push_back(res);
    return pass ? exit_ok : exit_verification_failed;
}

int run_table(const Args& a, Report& r) {
    const Exponent p = Exponent::parse(a.p);
    const Exponent q = Exponent::parse(a.q);
    const int n = a.n > 0 ? a.n : 1;
    r.params = {{"p", a.p}, {"q", a.q}, {"n", n}};
    const CoincidenceRows rows = coincidence_tables(p, q);
    const bool consistent = rows == rows_from_classification(classify_operators(p, q, n));
    r.results.push_back(
        {{"type", "table"}, {"p", a.p}, {"q", a.q}, {"rows", to_json(rows)}, {"consistent", consistent}});
    return consistent ? exit_ok : exit_verification_failed;
}

int run_growth(const Args& a, Report& r) {
    const Exponent p = Exponent::parse(a.p);
    const Exponent q = Exponent::parse(a.q);
    const GrowthIdeal ideal = parse_growth_ideal(a.ideal);
    const Rational s = parse_rational(a.s);
    if (a.nmax < 32) throw std::invalid_argument("--nmax must be at least 32");
    int hi = 0;
    while ((std::size_t{1} << (hi + 1)) <= a.nmax) ++hi;
    r.params = operator_params(a);
    r.params["ideal"] = a.ideal;
    r.params["s"] = a.s;
    r.params["nmax"] = a.nmax;
    const GrowthScan g = growth_scan(p, q, a.n, ideal, s, dyadic_grid(4, hi));
    r.results.push_back({{"type", "growth"}, {"scan", to_json(g)}});
    return g.agrees ? exit_ok : exit_verification_failed;
}

}  // namespace

Outcome execute(const std::vector<std::string>& argv) {
    Args a;
    CLI::App app{"Diagonal multilinear operators between l_p spaces: norms, certificates, classification",
                 "diaglab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", a.seed, "seed for randomized engines");
    app.add_flag("--timing", a.timing, "record wall time in the report");

    auto* classify = app.add_subcommand("classify", "sequence spaces of N, I, E, L");
    classify->add_option("--p", a.p)->required();
    classify->add_option("--q", a.q);
    classify->add_option("--n", a.n)->required();
    classify->add_flag("--forms", a.forms, "n-linear forms on l_p instead of operators into l_q");

    auto* norm = app.add_subcommand("norm", "exact ideal norm of a diagonal operator");
    norm->add_option("--ideal", a.ideal)->required()->check(CLI::IsMember({"L", "N", "I"}));
    norm->add_option("--p", a.p)->required();
    norm->add_option("--q", a.q)->required();
    norm->add_option("--n", a.n)->required();
    norm->add_option("--alpha", a.alpha, "comma list or pow:s")->required();
    norm->add_option("--nmax", a.nmax, "length for pow:s");

    auto* certify = app.add_subcommand("certify", "norm certificates");
    certify->add_option("--kind", a.kind)
        ->required()
        ->check(CLI::IsMember(
            {"ext-upper-linf", "ext-upper-sqrt", "nuclear-factor", "integral-dual", "phi-bound", "ext-diagnostic"}));
    certify->add_option("--p", a.p);
    certify->add_option("--q", a.q);
    certify->add_option("--n", a.n);
    certify->add_option("--alpha", a.alpha);
    certify->add_option("--nmax", a.nmax);
    certify->add_option("--N", a.dim);
    certify->add_option("--field", a.field)->check(CLI::IsMember({"real", "complex"}));
    certify->add_option("--p-rest", a.p_rest, "exponents of slots 3..n")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "check an identity");
    verify->add_option("--identity", a.identity)
        ->required()
        ->check(CLI::IsMember({"walsh", "bh-norm", "composition"}));
    verify->add_option("--N", a.dim)->required();
    verify->add_option("--n", a.n)->default_val(3);
    verify->add_option("--field", a.field)->check(CLI::IsMember({"real", "complex"}));
    verify->add_option("--trials", a.trials);
    verify->add_option("--tol", a.tol);

    auto* table = app.add_subcommand("table", "coincidence table rows");
    table->add_option("--p", a.p)->required();
    table->add_option("--q", a.q)->required();
    table->add_option("--n", a.n, "arity used for the consistency check");

    auto* growth = app.add_subcommand("growth", "growth scan of finite-section norms of k^-s");
    growth->add_option("--p", a.p)->required();
    growth->add_option("--q", a.q)->required();
    growth->add_option("--n", a.n)->required();
    growth->add_option("--ideal", a.ideal, "N, I or L")->required();
    growth->add_option("--s", a.s)->required();
    growth->add_option("--nmax", a.nmax);

    Outcome out;
    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out.help = app.help();
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.help = app.help("", CLI::AppFormatMode::All);
        return out;
    } catch (const CLI::ParseError& e) {
        out.exit_code = exit_usage;
        out.diagnostic = std::string("error: ") + e.what() + "\n\n" + app.help();
        return out;
    }
    out.format = parse_format(a.format);

    Report r;
    r.command = argv;
    r.seed = a.seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        int code = exit_ok;
        if (classify->parsed()) {
            code = run_classify(a, r);
        } else if (norm->parsed()) {
            code = run_norm(a, r);
        } else if (certify->parsed()) {
            code = run_certify(a, r);
        } else if (verify->parsed()) {
            code = run_verify(a, r);
        } else if (table->parsed()) {
            code = run_table(a, r);
        } else {
            code = run_growth(a, r);
        }
        out.exit_code = code;
    } catch (const std::invalid_argument& e) {
        out.exit_code = exit_usage;
        out.diagnostic = std::string("error: ") + e.what() + "\n";
        return out;
    } catch (const std::out_of_range& e) {
        out.exit_code = exit_usage;
        out.diagnostic = std::string("error: ") + e.what() + "\n";
        return out;
    }
    if (a.timing) {
        r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out.report = std::move(r);
    return out;
}

}  // namespace diaglab
