#include "diaglab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diaglab {

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::exact: return "exact";
        case CertKind::upper: return "upper";
        case CertKind::lower: return "lower";
    }
    return "exact";
}

CertKind parse_cert_kind(std::string_view text) {
    if (text == "exact") return CertKind::exact;
    if (text == "upper") return CertKind::upper;
    if (text == "lower") return CertKind::lower;
    throw std::invalid_argument("unknown certificate kind '" + std::string(text) + "'");
}

nlohmann::ordered_json to_json(const NormCertificate& c) {
    nlohmann::ordered_json j;
    j["value"] = c.value;
    j["kind"] = to_string(c.kind);
    j["method"] = c.method;
    j["witness_field"] = to_string(c.witness_field);
    auto w = nlohmann::ordered_json::array();
    for (const auto& v : c.witness) w.push_back(vector_to_json(v, c.witness_field));
    j["witness"] = std::move(w);
    if (c.upper_bound) j["upper_bound"] = *c.upper_bound;
    j["seed"] = c.seed;
    j["iterations"] = c.iterations;
    j["converged"] = c.converged;
    j["notes"] = c.notes;
    return j;
}

NormCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    NormCertificate c;
    c.value = j.at("value").get<double>();
    c.kind = parse_cert_kind(j.at("kind").get<std::string>());
    c.method = j.at("method").get<std::string>();
    c.witness_field = parse_field(j.at("witness_field").get<std::string>());
    for (const auto& v : j.at("witness")) c.witness.push_back(vector_from_json(v));
    if (j.contains("upper_bound")) c.upper_bound = j["upper_bound"].get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.iterations = j.at("iterations").get<int>();
    c.converged = j.at("converged").get<bool>();
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
}

double lp_norm(std::span<const Scalar> v, const Exponent& u) {
    double m = 0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    if (u.is_infinite() || m == 0.0) return m;
    const double e = u.to_double();
    double acc = 0;
    for (const auto& z : v) acc += std::pow(std::abs(z) / m, e);
    return m * std::pow(acc, 1.0 / e);
}

NormCertificate diagonal_norm_exact(const DiagonalOperator& op) {
    NormCertificate c;
    c.kind = CertKind::exact;
    const auto h = holder_r(op.p, op.q, op.arity);
    const std::size_t dim = op.dimension();
    Vector x(dim, 0.0);
    if (h.bounded()) {
        c.method = "holder:l_inf";
        c.value = lp_norm(op.alpha, Exponent::infinity());
        if (dim > 0) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < dim; ++k) {
                if (std::abs(op.alpha[k]) > std::abs(op.alpha[best])) best = k;
            }
            x[best] = 1.0;
        }
    } else {
        const Exponent& r = *h.r;
        c.method = "holder:l_" + r.to_string();
        c.value = lp_norm(op.alpha, r);
        // x_k = |alpha_k|^{r/p} / ||alpha||_r^{r/p} attains the norm in every slot.
        if (c.value > 0) {
            const double ratio = r.to_double() / op.p.to_double();
            for (std::size_t k = 0; k < dim; ++k) {
                x[k] = ratio == 0.0 ? 1.0 : std::pow(std::abs(op.alpha[k]) / c.value, ratio);
            }
        }
    }
    if (dim > 0) c.witness.assign(static_cast<std::size_t>(op.arity), x);
    return c;
}

namespace {

std::vector<Scalar> contract_first(std::span<const Scalar> a, std::span<const Scalar> x) {
    const std::size_t n = x.size();
    const std::size_t inner = a.size() / n;
    std::vector<Scalar> out(inner, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0.0) continue;
        for (std::size_t i = 0; i < inner; ++i) out[i] += x[j] * a[j * inner + i];
    }
    return out;
}

Vector sign_vertex(std::size_t bits, std::size_t n) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (bits >> i) & 1U ? -1.0 : 1.0;
    return x;
}

struct VertexSearch {
    std::size_t dim;
    int enumerated;
    std::optional<Exponent> target;
    double best = -1;
    std::vector<Vector> best_vertices;
    Vector best_tail;
    std::vector<Vector> current;

    void run(std::span<const Scalar> partial, int slot) {
        if (slot == enumerated) {
            double v;
            if (target) {
                v = lp_norm(partial, *target);
            } else {
                v = 0;
                for (const auto& z : partial) v += std::abs(z);
            }
            if (v > best) {
                best = v;
                best_vertices = current;
                best_tail.assign(partial.begin(), partial.end());
            }
            return;
        }
        const std::size_t count = std::size_t{1} << dim;
        // Negating a whole slot leaves the modulus unchanged: fix the first sign of slot 0.
        const std::size_t limit = slot == 0 ? count / 2 : count;
        for (std::size_t bits = 0; bits < limit; ++bits) {
            current[static_cast<std::size_t>(slot)] = sign_vertex(bits, dim);
            run(contract_first(partial, current[static_cast<std::size_t>(slot)]), slot + 1);
        }
    }
};

double phase_real(double v) { return v < 0 ? -1.0 : 1.0; }

Scalar phase_of(const Scalar& z, Field field) {
    if (field == Field::real) return phase_real(z.real());
    const double m = std::abs(z);
    return m == 0.0 ? Scalar(1.0) : std::conj(z) / m;
}

}  // namespace

NormCertificate vertex_bruteforce_norm(const DenseForm& t, std::optional<Exponent> q_target) {
    if (t.field() != Field::real) {
        throw std::invalid_argument("vertex enumeration applies to real forms only; use alternating ascent");
    }
    const int linf_slots = q_target ? t.arity() - 1 : t.arity();
    if (linf_slots < 1) throw std::invalid_argument("operator forms need at least one input slot");
    const std::size_t dim = t.dimension();
    if (static_cast<std::size_t>(linf_slots) * dim > static_cast<std::size_t>(max_vertex_bits)) {
        throw std::invalid_argument("vertex enumeration guard exceeded: n*N = " +
                                    std::to_string(static_cast<std::size_t>(linf_slots) * dim) + " > " +
                                    std::to_string(max_vertex_bits));
    }
    VertexSearch search{dim, t.arity() - 1, q_target, -1, {}, {}, std::vector<Vector>(static_cast<std::size_t>(t.arity() - 1))};
    search.run(t.coefficients(), 0);

    NormCertificate c;
    c.kind = CertKind::exact;
    c.method = q_target ? "vertex-enumeration:l_q=" + q_target->to_string() : "vertex-enumeration";
    c.value = search.best;
    c.witness = search.best_vertices;
    if (!q_target) {
        // The last slot's best vertex is the sign pattern of the induced functional.
        Vector last(dim);
        for (std::size_t i = 0; i < dim; ++i) last[i] = phase_real(search.best_tail[i].real());
        c.witness.push_back(std::move(last));
    }
    c.iterations = 1;
    return c;
}

Vector holder_maximizer(std::span<const Scalar> gamma, const Exponent& p, Field field) {
    const std::size_t n = gamma.size();
    Vector x(n, 0.0);
    if (n == 0) return x;
    double m = 0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(gamma[j]) > m) {
            m = std::abs(gamma[j]);
            arg = j;
        }
    }
    if (p.is_infinite()) {
        for (std::size_t j = 0; j < n; ++j) x[j] = phase_of(gamma[j], field);
        return x;
    }
    if (p == Exponent::one()) {
        x[arg] = phase_of(gamma[arg], field);
        return x;
    }
    if (m == 0.0) {
        const double v = std::pow(static_cast<double>(n), -1.0 / p.to_double());
        std::fill(x.begin(), x.end(), Scalar(v));
        return x;
    }
    const Exponent pc = conjugate(p);
    const double e = pc.to_double() - 1.0;
    double norm_pc = 0;
    for (const auto& g : gamma) norm_pc += std::pow(std::abs(g) / m, pc.to_double());
    norm_pc = std::pow(norm_pc, 1.0 / pc.to_double());
    const double denom = std::pow(norm_pc, e);
    for (std::size_t j = 0; j < n; ++j) {
        const double mag = std::abs(gamma[j]);
        x[j] = mag == 0.0 ? Scalar(0.0) : phase_of(gamma[j], field) * (std::pow(mag / m, e) / denom);
    }
    return x;
}

NormCertificate alternating_ascent_norm(const DenseForm& t, std::span<const Exponent> p_slots,
                                        std::optional<Exponent> q_target, const AscentOptions& opts) {
    std::vector<Exponent> exps(p_slots.begin(), p_slots.end());
    if (q_target) exps.push_back(conjugate(*q_target));
    if (exps.size() != static_cast<std::size_t>(t.arity())) {
        throw std::invalid_argument("need one exponent per input slot");
    }
    const std::size_t dim = t.dimension();
    const std::size_t slots = exps.size();
    const Field field = t.field();
    std::mt19937_64 rng(opts.seed);

    auto normalized = [&](Vector v, const Exponent& p) {
        const double nrm = lp_norm(v, p);
        if (nrm > 0) {
            for (auto& z : v) z /= nrm;
        }
        return v;
    };

    NormCertificate best;
    best.kind = CertKind::lower;
    best.method = "alternating-ascent";
    best.seed = opts.seed;
    best.witness_field = field;
    best.value = -1;
    int total_sweeps = 0;

    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::vector<Vector> xs(slots);
        const auto ur = static_cast<std::size_t>(restart);
        for (std::size_t i = 0; i < slots; ++i) {
            Vector v(dim, 0.0);
            if (restart == 0) {
                std::fill(v.begin(), v.end(), Scalar(1.0));
            } else if (ur <= dim) {
                v[ur - 1] = 1.0;
            } else {
                v = random_vector(dim, field, rng);
            }
            xs[i] = normalized(std::move(v), exps[i]);
        }

        double value = 0;
        double prev = -1;
        bool converged = false;
        int sweep = 0;
        for (; sweep < opts.max_sweeps; ++sweep) {
            Vector gamma;
            for (std::size_t i = 0; i < slots; ++i) {
                gamma = induced_functional(t, xs, static_cast<int>(i));
                xs[i] = holder_maximizer(gamma, exps[i], field);
            }
            value = lp_norm(gamma, conjugate(exps.back()));
            if (value == 0.0 || (prev >= 0 && value - prev <= opts.rel_tol * value)) {
                converged = true;
                ++sweep;
                break;
            }
            prev = value;
        }
        total_sweeps += sweep;

        const double attained = std::abs(evaluate_form(t, xs));
        if (attained > best.value) {
            best.value = attained;
            best.witness = xs;
            best.converged = converged;
        }
    }
    best.iterations = total_sweeps;
    if (!best.converged) best.notes.push_back("sweep budget exhausted before the relative tolerance was met");
    if (q_target) best.method += ":l_q=" + q_target->to_string();
    return best;
}

NormCertificate weak_s_norm(std::span<const Vector> vectors, const Exponent& s, const Exponent& p,
                            const AscentOptions& opts) {
    NormCertificate c;
    c.kind = CertKind::exact;
    const std::size_t m = vectors.size();
    if (m == 0) {
        c.method = "weak-s:empty";
        return c;
    }
    const std::size_t n = vectors.front().size();
    Field field = Field::real;
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("weak-s norm: vectors must share a length");
        if (std::any_of(v.begin(), v.end(), [](const Scalar& z) { return z.imag() != 0.0; })) field = Field::complex;
    }
    c.witness_field = field;
    const Exponent pc = conjugate(p);

    if (m == 1) {
        c.method = "weak-s:dual-pairing";
        c.value = lp_norm(vectors.front(), p);
        c.witness.push_back(holder_maximizer(vectors.front(), pc, field));
        return c;
    }

    std::vector<bool> used(n, false);
    bool canonical = true;
    for (const auto& v : vectors) {
        std::size_t ones = 0;
        std::size_t where = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 1.0) {
                ++ones;
                where = j;
            } else if (v[j] != 0.0) {
                ones = 2;
            }
        }
        if (ones != 1 || used[where]) {
            canonical = false;
            break;
        }
        used[where] = true;
    }
    if (canonical) {
        // Norm of the identity l_{p'}^M -> l_s^M.
        c.method = "weak-s:canonical";
        c.value = s >= pc ? 1.0
                          : std::pow(static_cast<double>(m), to_double(s.reciprocal() - pc.reciprocal()));
        return c;
    }

    const std::size_t dim = std::max(m, n);
    DenseForm form(2, dim, field);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t idx[2] = {j, k};
            form.at(idx) = vectors[k][j];
        }
    }
    const Exponent slot_exp[1] = {pc};
    c = alternating_ascent_norm(form, slot_exp, s, opts);
    c.method = "weak-s:" + c.method;
    Vector row_norms(m);
    for (std::size_t k = 0; k < m; ++k) row_norms[k] = lp_norm(vectors[k], p);
    c.upper_bound = lp_norm(row_norms, s);
    return c;
}

double partial_lu_norm(std::span<const Scalar> alpha, const Exponent& u, std::size_t m) {
    if (m > alpha.size()) throw std::invalid_argument("prefix length exceeds sequence length");
    return lp_norm(alpha.first(m), u);
}

}  // namespace diaglab
