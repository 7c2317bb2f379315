#include "diaglab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diaglab {

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(std::string_view text) {
    if (text == "real") return Field::real;
    if (text == "complex") return Field::complex;
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

Matrix::Matrix(std::size_t n, Field field) : n_(n), field_(field), data_(n * n) {}

Matrix::Matrix(std::size_t n, Field field, std::vector<Scalar> entries)
    : n_(n), field_(field), data_(std::move(entries)) {
    if (data_.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    if (field == Field::real &&
        std::any_of(data_.begin(), data_.end(), [](const Scalar& z) { return z.imag() != 0.0; })) {
        throw std::invalid_argument("real matrix with non-real entries");
    }
}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d, Field field) {
    Matrix m(d.size(), field);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    if (field == Field::real && std::any_of(d.begin(), d.end(), [](const Scalar& z) { return z.imag() != 0.0; })) {
        throw std::invalid_argument("real matrix with non-real entries");
    }
    return m;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
    if (x.size() != n_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vector y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Scalar acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto& z : m.data_) z = std::conj(z);
    return m;
}

WalshMatrix WalshMatrix::from_symmetric(Matrix m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m(i, j) != m(j, i)) throw std::invalid_argument("Walsh matrices must be symmetric");
        }
    }
    return WalshMatrix(std::move(m));
}

WalshMatrix hadamard(std::size_t n) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("Hadamard dimension must be a power of two >= 2, got " + std::to_string(n));
    }
    Matrix a(2, Field::real, {1.0, 1.0, 1.0, -1.0});
    for (std::size_t m = 2; m < n; m *= 2) {
        Matrix next(2 * m, Field::real);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                next(i, j) = a(i, j);
                next(i, j + m) = a(i, j);
                next(i + m, j) = a(i, j);
                next(i + m, j + m) = -a(i, j);
            }
        }
        a = std::move(next);
    }
    return WalshMatrix(std::move(a));
}

namespace {

// exp(2 pi i m / n), exact at multiples of a quarter turn.
Scalar root_of_unity(std::size_t m, std::size_t n) {
    m %= n;
    if (m == 0) return {1.0, 0.0};
    if (4 * m == n) return {0.0, 1.0};
    if (2 * m == n) return {-1.0, 0.0};
    if (4 * m == 3 * n) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

WalshMatrix fourier(std::size_t n) {
    if (n < 1) throw std::invalid_argument("Fourier dimension must be positive");
    Matrix a(n, Field::complex);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t r = 1; r <= n; ++r) a(k - 1, r - 1) = root_of_unity((r * k) % n, n);
    }
    return WalshMatrix(std::move(a));
}

double WalshReport::max_residual() const {
    return std::max({unimodular_residual, symmetry_residual, orthogonality_residual});
}

WalshReport verify_walsh(const WalshMatrix& a, double tol) {
    const std::size_t n = a.size();
    WalshReport rep;
    rep.tolerance = tol;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            rep.unimodular_residual = std::max(rep.unimodular_residual, std::abs(std::norm(a(k, r)) - 1.0));
            rep.symmetry_residual = std::max(rep.symmetry_residual, std::abs(a(k, r) - a(r, k)));
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            Scalar s = 0.0;
            for (std::size_t r = 0; r < n; ++r) s += a(r, k) * std::conj(a(r, l));
            const double target = k == l ? static_cast<double>(n) : 0.0;
            rep.orthogonality_residual = std::max(rep.orthogonality_residual, std::abs(s - target));
        }
    }
    rep.pass = rep.max_residual() <= tol;
    return rep;
}

Matrix xi_matrix(const WalshMatrix& a) { return a.matrix().conj(); }

Vector apply_xi(const WalshMatrix& a, std::span<const Scalar> x) {
    if (x.size() != a.size()) throw std::invalid_argument("xi_N: vector length does not match N");
    return xi_matrix(a).apply(x);
}

double xi_norm_bound(const Exponent& p, std::size_t n) {
    return std::pow(static_cast<double>(n), to_double(conjugate(p).reciprocal()));
}

double xi_norm_l1_exact(const WalshMatrix& a) {
    double m = 0;
    for (const auto& z : a.matrix().data()) m = std::max(m, std::abs(z));
    return m;
}

nlohmann::ordered_json scalar_to_json(const Scalar& z, Field field) {
    if (field == Field::real) {
        const double x = z.real();
        if (x == std::trunc(x) && std::abs(x) < 9.0e15) return static_cast<std::int64_t>(x);
        return x;
    }
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const nlohmann::ordered_json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("complex scalar must be a [re, im] pair");
        return {j[0].get<double>(), j[1].get<double>()};
    }
    return {j.get<double>(), 0.0};
}

nlohmann::ordered_json vector_to_json(std::span<const Scalar> v, Field field) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& z : v) out.push_back(scalar_to_json(z, field));
    return out;
}

Vector vector_from_json(const nlohmann::ordered_json& j) {
    Vector v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

nlohmann::ordered_json to_json(const Matrix& m) {
    nlohmann::ordered_json j;
    j["N"] = m.size();
    j["field"] = to_string(m.field());
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        rows.push_back(vector_to_json(m.data().subspan(i * m.size(), m.size()), m.field()));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const nlohmann::ordered_json& j) {
    const auto n = j.at("N").get<std::size_t>();
    const Field field = parse_field(j.at("field").get<std::string>());
    std::vector<Scalar> entries;
    for (const auto& row : j.at("entries")) {
        for (const auto& e : row) entries.push_back(scalar_from_json(e));
    }
    return Matrix(n, field, std::move(entries));
}

}  // namespace diaglab
