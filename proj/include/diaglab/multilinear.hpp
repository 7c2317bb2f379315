#pragma once

/**
 * @file multilinear.hpp
 * @brief Dense multilinear forms on (K^N)^n and diagonal multilinear operators.
 *
 * A DenseForm stores c[j_1, ..., j_n] row-major (j_1 most significant) and
 * evaluates to sum c[j] x_1(j_1) ... x_n(j_n).
 *
 * Operators into l_q^N are handled through the canonical identification with
 * an (n+1)-linear form: the trailing slot carries the output coordinate, so
 * T(x_1, ..., x_n)_k = c[j_1, ..., j_n, k] contracted with x_1 ... x_n. The
 * norm engines take a target exponent and pair that slot with l_{q'}.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "json.hpp"

#include "diaglab/exponent.hpp"
#include "diaglab/matrix.hpp"

namespace diaglab {

/// Dense storage limit: N^n <= 10^7 coefficients.
inline constexpr std::size_t max_dense_entries = 10'000'000;

class DenseForm {
public:
    /// Zero form. Throws std::invalid_argument if N^n exceeds max_dense_entries.
    DenseForm(int arity, std::size_t dimension, Field field);
    DenseForm(int arity, std::size_t dimension, Field field, std::vector<Scalar> coefficients);

    int arity() const { return arity_; }
    std::size_t dimension() const { return dim_; }
    Field field() const { return field_; }
    std::span<const Scalar> coefficients() const { return coeffs_; }

    Scalar& at(std::span<const std::size_t> index);
    const Scalar& at(std::span<const std::size_t> index) const;

    friend bool operator==(const DenseForm&, const DenseForm&) = default;

private:
    std::size_t offset(std::span<const std::size_t> index) const;

    int arity_;
    std::size_t dim_;
    Field field_;
    std::vector<Scalar> coeffs_;
};

/// T_alpha(x_1, ..., x_n) = sum_k alpha(k) x_1(k) ... x_n(k) e_k from l_p to l_q.
struct DiagonalOperator {
    int arity = 1;
    Vector alpha;
    Exponent p = Exponent::one();
    Exponent q = Exponent::one();
    Field field = Field::real;

    std::size_t dimension() const { return alpha.size(); }

    /// Coefficients of the scalar form phi_alpha (c[k, ..., k] = alpha(k)).
    DenseForm as_form() const;
    /// The (n+1)-linear form with trailing output slot.
    DenseForm as_operator_form() const;

    friend bool operator==(const DiagonalOperator&, const DiagonalOperator&) = default;
};

/// Rejects a vector with non-zero imaginary parts when field is real.
void check_field(std::span<const Scalar> x, Field field);

Scalar evaluate_form(const DenseForm& t, std::span<const Vector> xs);

/// Output vector of the operator form (arity n+1) on n inputs.
Vector evaluate_operator(const DenseForm& t, std::span<const Vector> xs);

/// Coefficients of the linear functional obtained by fixing every slot except
/// `free_slot`; xs must hold arity() vectors (the entry at free_slot is ignored).
Vector induced_functional(const DenseForm& t, std::span<const Vector> xs, int free_slot);

Scalar evaluate_diagonal_form(const DiagonalOperator& op, std::span<const Vector> xs);
Vector evaluate_diagonal(const DiagonalOperator& op, std::span<const Vector> xs);

/// L_N with c[j, k, l, ..., l] = a_jl a_lk. Requires n >= 3.
DenseForm bh_form(const WalshMatrix& a, int n);

/// Direct triple-sum evaluation of L_N without materializing the dense array.
Scalar evaluate_bh(const WalshMatrix& a, std::span<const Vector> xs);

/// Phi_N: all-ones diagonal on the first N coordinates, n slots. p and q are
/// set to 1 and inf, the pairing used when Phi_N is read as a form on l_1.
DiagonalOperator phi_form(std::size_t n_dim, int n);

/// (x_1, ..., x_n) -> T(M_1 x_1, ..., M_n x_n); an empty optional is the identity.
DenseForm precompose(const DenseForm& t, std::span<const std::optional<Matrix>> maps);

struct CompositionReport {
    bool pass = false;
    std::size_t dimension = 0;
    int arity = 0;
    Field field = Field::real;
    int trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0;
    /// max |lhs - rhs| / (N^2 sum_r prod_i |x_i(r)|) over all trials.
    double max_relative_residual = 0;
};

/// Compares L_N(xi x_1, xi x_2, x_3, ..., x_n) with N^2 sum_r prod_i x_i(r) on
/// seeded random inputs (uniform in [-1, 1], real and imaginary parts independently).
CompositionReport composition_identity_check(const WalshMatrix& a, int n, int trials, double tol,
                                             std::uint64_t seed);

/// Same check on caller-supplied inputs; returns {lhs, rhs}.
std::pair<Scalar, Scalar> composition_identity_sides(const WalshMatrix& a, std::span<const Vector> xs);

/// Entries uniform in [-1, 1] (imaginary part too for complex).
Vector random_vector(std::size_t n, Field field, std::mt19937_64& rng);

nlohmann::ordered_json to_json(const DenseForm& t);
DenseForm dense_form_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const DiagonalOperator& op);
DiagonalOperator diagonal_from_json(const nlohmann::ordered_json& j);

}  // namespace diaglab
