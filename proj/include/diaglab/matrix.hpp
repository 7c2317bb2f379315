#pragma once

// Walsh matrices (Sylvester-Hadamard and Fourier) and the linear map xi_N.
//
// Storage is std::complex<double> throughout. Hadamard entries are +-1 and
// every sum formed while verifying or precomposing them is an integer well
// below 2^53, so the real case stays bit-exact.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "diaglab/exponent.hpp"

namespace diaglab {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

enum class Field { real, complex };

std::string to_string(Field f);
Field parse_field(std::string_view text);

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix(std::size_t n, Field field);
    Matrix(std::size_t n, Field field, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n, Field field);
    static Matrix diagonal(std::span<const Scalar> d, Field field);

    std::size_t size() const { return n_; }
    Field field() const { return field_; }

    const Scalar& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
    Scalar& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

    std::span<const Scalar> data() const { return data_; }

    Vector apply(std::span<const Scalar> x) const;
    Matrix conj() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> data_;
};

/// Symmetric matrix with unimodular entries and orthogonal columns
/// (sum_r a_rk conj(a_rl) = N delta_kl). Construct through hadamard() or fourier().
class WalshMatrix {
public:
    const Matrix& matrix() const { return m_; }
    std::size_t size() const { return m_.size(); }
    Field field() const { return m_.field(); }
    const Scalar& operator()(std::size_t k, std::size_t r) const { return m_(k, r); }

    /// Wraps a symmetric matrix without checking the remaining axioms (see verify_walsh).
    /// Throws std::invalid_argument if m is not symmetric.
    static WalshMatrix from_symmetric(Matrix m);

private:
    explicit WalshMatrix(Matrix m) : m_(std::move(m)) {}
    friend WalshMatrix hadamard(std::size_t n);
    friend WalshMatrix fourier(std::size_t n);
    Matrix m_;
};

/// Sylvester block recursion A_{2N} = [[A_N, A_N], [A_N, -A_N]] starting at A_2.
/// Throws std::invalid_argument unless n = 2^m with m >= 1.
WalshMatrix hadamard(std::size_t n);

/// a_kr = exp(2 pi i r k / N) with 1-based r, k. Quarter-turn angles are exact.
WalshMatrix fourier(std::size_t n);

struct WalshReport {
    bool pass = false;
    double tolerance = 0;
    double unimodular_residual = 0;
    double symmetry_residual = 0;
    double orthogonality_residual = 0;

    double max_residual() const;
};

WalshReport verify_walsh(const WalshMatrix& a, double tol);

/// The matrix of xi_N: entry (k, r) is conj(a_kr).
Matrix xi_matrix(const WalshMatrix& a);

/// xi_N(x)_k = sum_r conj(a_kr) x(r).
Vector apply_xi(const WalshMatrix& a, std::span<const Scalar> x);

/// N^{1/p'}, the bound ||id: l_p -> l_1|| * ||xi_N: l_1 -> l_inf||.
double xi_norm_bound(const Exponent& p, std::size_t n);

/// ||xi_N : l_1^N -> l_inf^N|| = max |a_kr|.
double xi_norm_l1_exact(const WalshMatrix& a);

// JSON grids: real matrices as integer/number rows, complex as [re, im] pairs.
nlohmann::ordered_json scalar_to_json(const Scalar& z, Field field);
Scalar scalar_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json vector_to_json(std::span<const Scalar> v, Field field);
Vector vector_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace diaglab
