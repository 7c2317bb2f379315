#include "diaglab/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diaglab {

namespace {

std::size_t checked_power(std::size_t base, int exp) {
    std::size_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > max_dense_entries / base) {
            throw std::invalid_argument("dense form exceeds " + std::to_string(max_dense_entries) +
                                        " coefficients (N=" + std::to_string(base) +
                                        ", n=" + std::to_string(exp) + ")");
        }
        v *= base;
    }
    return v;
}

void check_inputs(const DenseForm& t, std::span<const Vector> xs, std::size_t expected_count) {
    if (xs.size() != expected_count) {
        throw std::invalid_argument("expected " + std::to_string(expected_count) + " input vectors, got " +
                                    std::to_string(xs.size()));
    }
    for (const auto& x : xs) {
        if (x.size() != t.dimension()) throw std::invalid_argument("input vector length does not match N");
        check_field(x, t.field());
    }
}

// Contracts the trailing axis of a row-major [outer][N] array with x.
std::vector<Scalar> contract_last(std::span<const Scalar> a, std::span<const Scalar> x) {
    const std::size_t n = x.size();
    std::vector<Scalar> out(a.size() / n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Scalar acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
        out[i] = acc;
    }
    return out;
}

// Contracts the leading axis of a row-major [N][inner] array with x.
std::vector<Scalar> contract_first(std::span<const Scalar> a, std::span<const Scalar> x) {
    const std::size_t n = x.size();
    const std::size_t inner = a.size() / n;
    std::vector<Scalar> out(inner, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < inner; ++i) out[i] += x[j] * a[j * inner + i];
    }
    return out;
}

}  // namespace

DenseForm::DenseForm(int arity, std::size_t dimension, Field field)
    : arity_(arity), dim_(dimension), field_(field) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    coeffs_.assign(checked_power(dimension, arity), 0.0);
}

DenseForm::DenseForm(int arity, std::size_t dimension, Field field, std::vector<Scalar> coefficients)
    : DenseForm(arity, dimension, field) {
    if (coefficients.size() != coeffs_.size()) {
        throw std::invalid_argument("coefficient count must be N^n");
    }
    check_field(coefficients, field);
    coeffs_ = std::move(coefficients);
}

std::size_t DenseForm::offset(std::span<const std::size_t> index) const {
    if (index.size() != static_cast<std::size_t>(arity_)) throw std::invalid_argument("index arity mismatch");
    std::size_t off = 0;
    for (auto j : index) {
        if (j >= dim_) throw std::out_of_range("form index out of range");
        off = off * dim_ + j;
    }
    return off;
}

Scalar& DenseForm::at(std::span<const std::size_t> index) { return coeffs_[offset(index)]; }
const Scalar& DenseForm::at(std::span<const std::size_t> index) const { return coeffs_[offset(index)]; }

DenseForm DiagonalOperator::as_form() const {
    DenseForm t(arity, dimension(), field);
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity));
    for (std::size_t k = 0; k < dimension(); ++k) {
        std::fill(idx.begin(), idx.end(), k);
        t.at(idx) = alpha[k];
    }
    return t;
}

DenseForm DiagonalOperator::as_operator_form() const {
    DiagonalOperator widened = *this;
    widened.arity = arity + 1;
    return widened.as_form();
}

void check_field(std::span<const Scalar> x, Field field) {
    if (field == Field::real && std::any_of(x.begin(), x.end(), [](const Scalar& z) { return z.imag() != 0.0; })) {
        throw std::invalid_argument("complex input supplied to a real form");
    }
}

Scalar evaluate_form(const DenseForm& t, std::span<const Vector> xs) {
    check_inputs(t, xs, static_cast<std::size_t>(t.arity()));
    std::vector<Scalar> a(t.coefficients().begin(), t.coefficients().end());
    for (int slot = t.arity() - 1; slot >= 0; --slot) a = contract_last(a, xs[static_cast<std::size_t>(slot)]);
    return a.front();
}

Vector evaluate_operator(const DenseForm& t, std::span<const Vector> xs) {
    if (t.arity() < 2) throw std::invalid_argument("operator forms need at least one input slot");
    check_inputs(t, xs, static_cast<std::size_t>(t.arity() - 1));
    std::vector<Scalar> a(t.coefficients().begin(), t.coefficients().end());
    for (const auto& x : xs) a = contract_first(a, x);
    return a;
}

Vector induced_functional(const DenseForm& t, std::span<const Vector> xs, int free_slot) {
    if (free_slot < 0 || free_slot >= t.arity()) throw std::out_of_range("free slot out of range");
    if (xs.size() != static_cast<std::size_t>(t.arity())) throw std::invalid_argument("need one vector per slot");
    std::vector<Scalar> a(t.coefficients().begin(), t.coefficients().end());
    for (int slot = t.arity() - 1; slot > free_slot; --slot) a = contract_last(a, xs[static_cast<std::size_t>(slot)]);
    for (int slot = 0; slot < free_slot; ++slot) a = contract_first(a, xs[static_cast<std::size_t>(slot)]);
    return a;
}

Scalar evaluate_diagonal_form(const DiagonalOperator& op, std::span<const Vector> xs) {
    Scalar acc = 0.0;
    for (Scalar v : evaluate_diagonal(op, xs)) acc += v;
    return acc;
}

Vector evaluate_diagonal(const DiagonalOperator& op, std::span<const Vector> xs) {
    if (xs.size() != static_cast<std::size_t>(op.arity)) throw std::invalid_argument("arity mismatch");
    Vector out(op.alpha);
    for (const auto& x : xs) {
        if (x.size() != op.dimension()) throw std::invalid_argument("input vector length does not match N");
        check_field(x, op.field);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] *= x[k];
    }
    return out;
}

DenseForm bh_form(const WalshMatrix& a, int n) {
    if (n < 3) throw std::invalid_argument("L_N needs arity n >= 3");
    const std::size_t dim = a.size();
    DenseForm t(n, dim, a.field());
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t l = 0; l < dim; ++l) {
                idx[0] = j;
                idx[1] = k;
                std::fill(idx.begin() + 2, idx.end(), l);
                t.at(idx) = a(j, l) * a(l, k);
            }
        }
    }
    return t;
}

Scalar evaluate_bh(const WalshMatrix& a, std::span<const Vector> xs) {
    if (xs.size() < 3) throw std::invalid_argument("L_N needs arity n >= 3");
    const std::size_t dim = a.size();
    for (const auto& x : xs) {
        if (x.size() != dim) throw std::invalid_argument("input vector length does not match N");
        check_field(x, a.field());
    }
    Scalar total = 0.0;
    for (std::size_t l = 0; l < dim; ++l) {
        Scalar tail = 1.0;
        for (std::size_t i = 2; i < xs.size(); ++i) tail *= xs[i][l];
        Scalar left = 0.0;
        Scalar right = 0.0;
        for (std::size_t j = 0; j < dim; ++j) left += a(j, l) * xs[0][j];
        for (std::size_t k = 0; k < dim; ++k) right += a(l, k) * xs[1][k];
        total += left * right * tail;
    }
    return total;
}

DiagonalOperator phi_form(std::size_t n_dim, int n) {
    if (n_dim < 1 || n < 1) throw std::invalid_argument("Phi_N needs N >= 1 and n >= 1");
    return DiagonalOperator{n, Vector(n_dim, 1.0), Exponent::one(), Exponent::infinity(), Field::real};
}

DenseForm precompose(const DenseForm& t, std::span<const std::optional<Matrix>> maps) {
    if (maps.size() != static_cast<std::size_t>(t.arity())) throw std::invalid_argument("need one map per slot");
    Field field = t.field();
    for (const auto& m : maps) {
        if (!m) continue;
        if (m->size() != t.dimension()) throw std::invalid_argument("map dimension does not match form");
        if (m->field() != t.field()) throw std::invalid_argument("cannot mix real and complex objects");
    }
    const std::size_t n = t.dimension();
    std::vector<Scalar> cur(t.coefficients().begin(), t.coefficients().end());
    // Mode product along each slot: c'[.., r, ..] = sum_j c[.., j, ..] M[j][r].
    std::size_t outer = 1;
    std::size_t inner = cur.size() / n;
    for (const auto& m : maps) {
        if (m) {
            std::vector<Scalar> next(cur.size(), 0.0);
            for (std::size_t o = 0; o < outer; ++o) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar* src = &cur[(o * n + j) * inner];
                    for (std::size_t r = 0; r < n; ++r) {
                        const Scalar w = (*m)(j, r);
                        if (w == 0.0) continue;
                        Scalar* dst = &next[(o * n + r) * inner];
                        for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
                    }
                }
            }
            cur = std::move(next);
        }
        outer *= n;
        inner /= n;
    }
    return DenseForm(t.arity(), n, field, std::move(cur));
}

std::pair<Scalar, Scalar> composition_identity_sides(const WalshMatrix& a, std::span<const Vector> xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 3) throw std::invalid_argument("composition identity needs n >= 3");
    std::vector<Vector> args(xs.begin(), xs.end());
    args[0] = apply_xi(a, xs[0]);
    args[1] = apply_xi(a, xs[1]);
    const Scalar lhs = evaluate_form(bh_form(a, n), args);
    Scalar rhs = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        Scalar prod = 1.0;
        for (const auto& x : xs) prod *= x[r];
        rhs += prod;
    }
    const double nn = static_cast<double>(a.size());
    return {lhs, nn * nn * rhs};
}

Vector random_vector(std::size_t n, Field field, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(n);
    for (auto& z : v) {
        const double re = u(rng);
        const double im = field == Field::complex ? u(rng) : 0.0;
        z = {re, im};
    }
    return v;
}

CompositionReport composition_identity_check(const WalshMatrix& a, int n, int trials, double tol,
                                             std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("composition identity needs n >= 3");
    CompositionReport rep;
    rep.dimension = a.size();
    rep.arity = n;
    rep.field = a.field();
    rep.trials = trials;
    rep.seed = seed;
    rep.tolerance = tol;

    const DenseForm l_form = bh_form(a, n);
    const double nn = static_cast<double>(a.size());
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Vector> xs;
        for (int i = 0; i < n; ++i) xs.push_back(random_vector(a.size(), a.field(), rng));

        std::vector<Vector> args = xs;
        args[0] = apply_xi(a, xs[0]);
        args[1] = apply_xi(a, xs[1]);
        const Scalar lhs = evaluate_form(l_form, args);

        Scalar rhs = 0.0;
        double scale = 0.0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            Scalar prod = 1.0;
            double mag = 1.0;
            for (const auto& x : xs) {
                prod *= x[r];
                mag *= std::abs(x[r]);
            }
            rhs += prod;
            scale += mag;
        }
        rhs *= nn * nn;
        scale *= nn * nn;

        const double diff = std::abs(lhs - rhs);
        const double rel = diff == 0.0 ? 0.0 : diff / scale;
        rep.max_relative_residual = std::max(rep.max_relative_residual, rel);
    }
    rep.pass = rep.max_relative_residual <= tol;
    return rep;
}

nlohmann::ordered_json to_json(const DenseForm& t) {
    nlohmann::ordered_json j;
    j["arity"] = t.arity();
    j["dimension"] = t.dimension();
    j["field"] = to_string(t.field());
    j["coefficients"] = vector_to_json(t.coefficients(), t.field());
    return j;
}

DenseForm dense_form_from_json(const nlohmann::ordered_json& j) {
    return DenseForm(j.at("arity").get<int>(), j.at("dimension").get<std::size_t>(),
                     parse_field(j.at("field").get<std::string>()), vector_from_json(j.at("coefficients")));
}

nlohmann::ordered_json to_json(const DiagonalOperator& op) {
    nlohmann::ordered_json j;
    j["arity"] = op.arity;
    j["dimension"] = op.dimension();
    j["field"] = to_string(op.field);
    j["p"] = op.p.to_string();
    j["q"] = op.q.to_string();
    j["alpha"] = vector_to_json(op.alpha, op.field);
    return j;
}

DiagonalOperator diagonal_from_json(const nlohmann::ordered_json& j) {
    DiagonalOperator op;
    op.arity = j.at("arity").get<int>();
    op.field = parse_field(j.at("field").get<std::string>());
    op.p = Exponent::parse(j.at("p").get<std::string>());
    op.q = Exponent::parse(j.at("q").get<std::string>());
    op.alpha = vector_from_json(j.at("alpha"));
    check_field(op.alpha, op.field);
    return op;
}

}  // namespace diaglab
