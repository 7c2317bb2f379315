#include "diaglab/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diaglab {

namespace {

std::string space(const Exponent& u) { return "l_" + u.to_string(); }

Scalar phase(const Scalar& z, Field field) {
    const double m = std::abs(z);
    if (m == 0.0) return 0.0;
    if (field == Field::real) return z.real() < 0 ? -1.0 : 1.0;
    return z / m;
}

double log_log_slope(const std::vector<std::size_t>& xs, const std::vector<double>& ys) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] > 0) pts.emplace_back(std::log(static_cast<double>(xs[i])), std::log(ys[i]));
    }
    if (pts.size() < 2) return 0;
    double mx = 0;
    double my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0;
    double sxx = 0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxx == 0 ? 0 : sxy / sxx;
}

}  // namespace

double FactorizationCertificate::product() const {
    double v = scale * middle_norm;
    for (const auto& leg : legs) v *= std::pow(leg.norm, leg.multiplicity);
    return v;
}

NormCertificate FactorizationCertificate::as_certificate() const {
    NormCertificate c;
    c.value = bound;
    c.kind = kind;
    c.method = method;
    for (const auto& leg : legs) {
        if (!leg.sequence.empty()) c.witness.push_back(leg.sequence);
    }
    c.witness_field = Field::complex;
    c.notes = notes;
    return c;
}

nlohmann::ordered_json to_json(const FactorizationCertificate& f) {
    nlohmann::ordered_json j;
    j["method"] = f.method;
    j["kind"] = to_string(f.kind);
    auto legs = nlohmann::ordered_json::array();
    for (const auto& leg : f.legs) {
        nlohmann::ordered_json l;
        l["name"] = leg.name;
        l["from"] = leg.from;
        l["to"] = leg.to;
        l["sequence"] = vector_to_json(leg.sequence, Field::complex);
        l["norm"] = leg.norm;
        l["multiplicity"] = leg.multiplicity;
        legs.push_back(std::move(l));
    }
    j["legs"] = std::move(legs);
    j["middle"] = f.middle;
    j["middle_ideal"] = f.middle_ideal;
    j["middle_norm"] = f.middle_norm;
    j["middle_fact"] = f.middle_fact;
    j["scale"] = f.scale;
    j["bound"] = f.bound;
    j["product"] = f.product();
    j["reconstruction_residual"] = f.reconstruction_residual;
    j["notes"] = f.notes;
    return j;
}

FactorizationCertificate factorization_from_json(const nlohmann::ordered_json& j) {
    FactorizationCertificate f;
    f.method = j.at("method").get<std::string>();
    f.kind = parse_cert_kind(j.at("kind").get<std::string>());
    for (const auto& l : j.at("legs")) {
        FactorizationLeg leg;
        leg.name = l.at("name").get<std::string>();
        leg.from = l.at("from").get<std::string>();
        leg.to = l.at("to").get<std::string>();
        leg.sequence = vector_from_json(l.at("sequence"));
        leg.norm = l.at("norm").get<double>();
        leg.multiplicity = l.at("multiplicity").get<int>();
        f.legs.push_back(std::move(leg));
    }
    f.middle = j.at("middle").get<std::string>();
    f.middle_ideal = j.at("middle_ideal").get<std::string>();
    f.middle_norm = j.at("middle_norm").get<double>();
    f.middle_fact = j.at("middle_fact").get<std::string>();
    f.scale = j.at("scale").get<double>();
    f.bound = j.at("bound").get<double>();
    f.reconstruction_residual = j.at("reconstruction_residual").get<double>();
    f.notes = j.at("notes").get<std::vector<std::string>>();
    return f;
}

NuclearIntegral nuclear_integral_exact(const DiagonalOperator& op) {
    NuclearIntegral r;
    r.t = nuclear_t(op.p, op.q, op.arity);
    const double v = lp_norm(op.alpha, r.t);

    r.integral.value = v;
    r.integral.kind = CertKind::exact;
    r.integral.method = "integral:" + space(r.t);
    r.nuclear = r.integral;
    r.nuclear.method = "nuclear:" + space(r.t);

    if (op.p == Exponent::one() && op.q.is_infinite()) {
        r.nuclear_requires_c0 = true;
        r.nuclear.notes.push_back("nuclear iff alpha in c_0; every finite section qualifies");
    }
    return r;
}

FactorizationCertificate nuclear_upper_factorization(const DiagonalOperator& op) {
    if (op.p == Exponent::one()) throw std::invalid_argument("nuclear factorization needs p > 1");
    const Exponent t = nuclear_t(op.p, op.q, op.arity);
    if (t == Exponent::one()) {
        throw std::invalid_argument("t = 1: no factorization needed, the nuclear norm is ||alpha||_1");
    }
    const Exponent pc = conjugate(op.p);
    const double td = t.to_double();
    const double eta_exp = td * to_double(pc.reciprocal());
    const double nu_exp = td * to_double(op.q.reciprocal());

    const std::size_t dim = op.dimension();
    Vector eta(dim);
    Vector nu(dim);
    double residual = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double mag = std::abs(op.alpha[k]);
        eta[k] = mag == 0.0 ? 0.0 : std::pow(mag, eta_exp);
        // nu carries the phase; for q = inf the power is 0 and nu is the phase itself.
        nu[k] = mag == 0.0 ? Scalar(0.0) : phase(op.alpha[k], op.field) * std::pow(mag, nu_exp);
        residual = std::max(residual, std::abs(nu[k] * std::pow(eta[k], op.arity) - op.alpha[k]));
    }

    FactorizationCertificate f;
    f.method = "nuclear-factorization";
    f.kind = CertKind::upper;
    f.legs.push_back({"D_eta", space(op.p), "l_1", eta, lp_norm(eta, pc), op.arity});
    f.legs.push_back({"D_nu", "l_inf", space(op.q), nu, lp_norm(nu, op.q), 1});
    f.middle = "Psi = T_(1,1,...) : l_1 x ... x l_1 -> l_inf";
    f.middle_ideal = "integral";
    f.middle_norm = 1;
    f.middle_fact = "diagonal operators l_1^n -> l_inf have integral norm ||alpha||_inf";
    f.bound = f.product();
    f.reconstruction_residual = residual;
    f.notes.push_back("t = " + t.to_string());
    return f;
}

NormCertificate integral_lower_duality(const DiagonalOperator& op) {
    const Exponent t = nuclear_t(op.p, op.q, op.arity);
    const Exponent tc = conjugate(t);
    NormCertificate c;
    c.kind = CertKind::lower;
    c.method = "integral-duality:l_" + t.to_string();
    c.witness_field = op.field;

    const double alpha_norm = lp_norm(op.alpha, Exponent::infinity());
    if (alpha_norm == 0.0) {
        c.value = 0;
        c.witness.push_back(Vector(op.dimension(), 0.0));
        return c;
    }
    Vector beta = holder_maximizer(op.alpha, tc, op.field);
    if (tc.is_infinite()) {
        for (std::size_t k = 0; k < beta.size(); ++k) {
            if (op.alpha[k] == 0.0) beta[k] = 0.0;
        }
    }
    Scalar pairing = 0.0;
    for (std::size_t k = 0; k < beta.size(); ++k) pairing += op.alpha[k] * beta[k];

    // |<alpha, beta>| <= ||T_alpha||_I * ||T_beta : l_{p'}^n -> l_{q'}||.
    const DiagonalOperator dual{op.arity, beta, conjugate(op.p), conjugate(op.q), op.field};
    const double dual_norm = diagonal_norm_exact(dual).value;
    c.value = std::abs(pairing) / dual_norm;
    c.witness.push_back(std::move(beta));
    c.notes.push_back("||T_beta : l_" + dual.p.to_string() + " -> l_" + dual.q.to_string() +
                      "|| = " + std::to_string(dual_norm) + ", equal to ||beta||_" + tc.to_string());
    return c;
}

NormCertificate extendible_upper_linfty(const DiagonalOperator& op) {
    NormCertificate c;
    c.kind = CertKind::upper;
    c.method = "extendible:factor-through-l_inf";
    c.value = lp_norm(op.alpha, op.q);
    c.witness_field = op.field;
    c.witness.push_back(op.alpha);
    c.notes.push_back("T_alpha = S_alpha o (i, ..., i) with i : l_" + op.p.to_string() +
                      " -> l_inf of norm 1");
    c.notes.push_back("S_alpha on l_inf x ... x l_inf is extendible with norm ||alpha||_" + op.q.to_string() +
                      " (l_inf has the metric extension property)");
    return c;
}

FactorizationCertificate extendible_upper_sqrt(std::span<const Scalar> alpha, const Exponent& p, int n, Field field) {
    if (!(p > Exponent::one() && p < Exponent(2))) {
        throw std::invalid_argument("square-root factorization needs 1 < p < 2, got p = " + p.to_string());
    }
    if (n < 2) throw std::invalid_argument("square-root factorization needs n >= 2");
    const Exponent pc = conjugate(p);
    const std::size_t dim = alpha.size();
    Vector first(dim);
    Vector second(dim);
    double residual = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        if (field == Field::complex) {
            first[k] = std::sqrt(alpha[k]);
            second[k] = first[k];
        } else {
            const double root = std::sqrt(std::abs(alpha[k].real()));
            first[k] = alpha[k].real() < 0 ? -root : root;
            second[k] = root;
        }
        residual = std::max(residual, std::abs(first[k] * second[k] - alpha[k]));
    }

    FactorizationCertificate f;
    f.method = "extendible-sqrt-factorization";
    f.kind = CertKind::upper;
    f.legs.push_back({"D_sigma", space(p), "l_1", first, lp_norm(first, pc), 1});
    f.legs.push_back({"D_sigma'", space(p), "l_1", second, lp_norm(second, pc), 1});
    if (n > 2) f.legs.push_back({"id", space(p), space(p), {}, 1.0, n - 2});
    f.middle = "Phi on l_1 x l_1 x l_p x ... x l_p";
    f.middle_ideal = "extendible";
    f.middle_norm = 1;
    f.middle_fact = "Phi_N factors through L_N and xi_N with extendible norm <= 1 for every N";
    f.bound = f.product();
    f.reconstruction_residual = residual;
    f.notes.push_back("bound equals ||alpha||_" + half_conjugate(p).to_string());
    return f;
}

PhiCertificate phi_extendibility_certificate(std::size_t n_dim, int n, std::span<const Exponent> p_rest, Field field,
                                             const AscentOptions& opts) {
    if (n < 3) throw std::invalid_argument("Phi_N certificate needs n >= 3");
    if (p_rest.size() != static_cast<std::size_t>(n - 2)) {
        throw std::invalid_argument("need n - 2 exponents for slots 3..n");
    }
    const WalshMatrix a = field == Field::real ? hadamard(n_dim) : fourier(n_dim);
    const double nn = static_cast<double>(n_dim);
    const auto walsh = verify_walsh(a, field == Field::real ? 0.0 : 1e-10 * nn);
    if (!walsh.pass) throw std::logic_error("constructed matrix failed the Walsh axioms");

    PhiCertificate out;
    out.dimension = n_dim;
    out.arity = n;
    out.field = field;

    LNormLeg& leg = out.l_norm;
    leg.value = nn * nn;
    // |L_N(x)| <= sum_l |(A^T x_1)_l| |(A x_2)_l| <= N ||x_1||_2 ||x_2||_2 <= N^2 on the l_inf ball.
    leg.analytic_upper = nn * nn;
    const DenseForm l_form = bh_form(a, n);
    if (field == Field::real && static_cast<std::size_t>(n) * n_dim <= static_cast<std::size_t>(max_vertex_bits)) {
        const auto c = vertex_bruteforce_norm(l_form);
        leg.verified_kind = CertKind::exact;
        leg.method = c.method;
        leg.verified_value = c.value;
        leg.consistent = c.value == leg.value;
    } else {
        const std::vector<Exponent> slots(static_cast<std::size_t>(n), Exponent::infinity());
        const auto c = alternating_ascent_norm(l_form, slots, std::nullopt, opts);
        leg.verified_kind = CertKind::lower;
        leg.method = c.method;
        leg.verified_value = c.value;
        leg.consistent = c.value >= leg.value * (1 - 1e-6) && c.value <= leg.analytic_upper * (1 + 1e-12);
    }

    FactorizationCertificate& f = out.chain;
    f.method = "phi-extendibility-chain";
    f.kind = CertKind::upper;
    f.legs.push_back({"xi_N", "l_1^N", "l_inf^N", {}, xi_norm_l1_exact(a), 2});
    for (const auto& pi : p_rest) {
        // sup over the unit ball of l_p of the max coordinate is 1 for every p.
        f.legs.push_back({"id", "l_" + pi.to_string() + "^N", "l_inf^N", {}, 1.0, 1});
    }
    f.middle = "L_N on l_inf^N x ... x l_inf^N";
    f.middle_ideal = "extendible";
    f.middle_norm = leg.value;
    f.middle_fact = "extendible and usual norms agree on l_inf^N; ||L_N|| = N^2";
    f.scale = 1.0 / (nn * nn);
    f.bound = f.product();
    f.notes.push_back("Phi_N(x) = L_N(xi x_1, xi x_2, x_3, ..., x_n) / N^2");
    f.notes.push_back("||L_N|| check: " + leg.method + " gave " + std::to_string(leg.verified_value));
    return out;
}

ExtendibleDiagnostic extendible_lower_diagnostic(const DiagonalOperator& op, std::span<const Rational> eps_grid) {
    const Exponent& p = op.p;
    const Exponent& q = op.q;
    if (!(p > Exponent::one())) throw std::invalid_argument("diagnostic needs p > 1");

    ExtendibleDiagnostic d;
    std::vector<std::pair<Exponent, std::string>> exps;
    if (p < Exponent(2)) {
        const Exponent pc = conjugate(p);
        if (q == Exponent::one()) {
            d.regime = "1<p<2, q=1";
            exps.emplace_back(half_conjugate(p), "p'/2");
        } else if (q > pc) {
            d.regime = "1<p<2, q>p'";
            exps.emplace_back(q, "q");
        } else {
            d.regime = "1<p<2, 1<q<=p'";
            for (const auto& eps : eps_grid) {
                exps.emplace_back(Exponent(pc.value() + eps), "p'+" + to_string(eps));
            }
            d.notes.push_back("only an inclusion into l_{p'+eps} is available in this region");
        }
        d.notes.push_back("statistic bounded by K w_{p'}((e_k))^n = K; K is not computed");
    } else {
        d.regime = "p>=2";
        exps.emplace_back(q, "q");
        d.notes.push_back("l_n(E, p, q) = l_q with constant K_G^{n-1}; K_G is not computed");
    }

    const std::size_t dim = op.dimension();
    std::vector<std::size_t> prefix;
    for (std::size_t m = 1; m < dim; m *= 2) prefix.push_back(m);
    if (dim > 0) prefix.push_back(dim);

    for (const auto& [u, label] : exps) {
        DiagnosticSeries s;
        s.u = u;
        s.label = label;
        s.prefix = prefix;
        for (auto m : prefix) s.values.push_back(partial_lu_norm(op.alpha, u, m));
        s.slope = log_log_slope(s.prefix, s.values);
        d.series.push_back(std::move(s));
    }
    return d;
}

nlohmann::ordered_json to_json(const PhiCertificate& c) {
    nlohmann::ordered_json j;
    j["dimension"] = c.dimension;
    j["arity"] = c.arity;
    j["field"] = to_string(c.field);
    j["value"] = c.chain.bound;
    j["kind"] = to_string(c.chain.kind);
    nlohmann::ordered_json l;
    l["value"] = c.l_norm.value;
    l["verified_kind"] = to_string(c.l_norm.verified_kind);
    l["method"] = c.l_norm.method;
    l["verified_value"] = c.l_norm.verified_value;
    l["analytic_upper"] = c.l_norm.analytic_upper;
    l["consistent"] = c.l_norm.consistent;
    j["l_norm"] = std::move(l);
    j["chain"] = to_json(c.chain);
    return j;
}

nlohmann::ordered_json to_json(const ExtendibleDiagnostic& d) {
    nlohmann::ordered_json j;
    j["regime"] = d.regime;
    auto series = nlohmann::ordered_json::array();
    for (const auto& s : d.series) {
        nlohmann::ordered_json e;
        e["u"] = s.u.to_string();
        e["label"] = s.label;
        e["prefix"] = s.prefix;
        e["values"] = s.values;
        e["slope"] = s.slope;
        series.push_back(std::move(e));
    }
    j["series"] = std::move(series);
    j["notes"] = d.notes;
    return j;
}

nlohmann::ordered_json to_json(const NuclearIntegral& r) {
    nlohmann::ordered_json j;
    j["t"] = r.t.to_string();
    j["nuclear"] = to_json(r.nuclear);
    j["integral"] = to_json(r.integral);
    j["nuclear_requires_c0"] = r.nuclear_requires_c0;
    return j;
}

}  // namespace diaglab
