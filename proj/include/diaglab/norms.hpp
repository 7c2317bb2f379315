#pragma once

/**
 * @file norms.hpp
 * @brief Norm engines on finite sections, each returning a NormCertificate.
 *
 * - diagonal_norm_exact: closed form for ||T_alpha : l_p^n -> l_q|| (Hoelder).
 * - vertex_bruteforce_norm: exact sup over sign vertices of the l_inf balls (real forms).
 * - alternating_ascent_norm: block coordinate ascent over l_p balls; lower bound only.
 * - weak_s_norm: weak s-summing norm of a finite sequence in l_p^N.
 *
 * All engines act on finite sections. For diagonal objects the finite-section
 * norms increase monotonically to the norm of the infinite sequence.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "diaglab/exponent.hpp"
#include "diaglab/matrix.hpp"
#include "diaglab/multilinear.hpp"

namespace diaglab {

enum class CertKind { exact, upper, lower };

std::string to_string(CertKind k);
CertKind parse_cert_kind(std::string_view text);

struct NormCertificate {
    double value = 0;
    CertKind kind = CertKind::exact;
    std::string method;
    /// Maximizing vectors (one per slot) or a dual sequence, depending on the method.
    std::vector<Vector> witness;
    Field witness_field = Field::real;
    /// Analytic upper bound attached to a lower certificate, when one is known.
    std::optional<double> upper_bound;
    std::uint64_t seed = 0;
    int iterations = 0;
    bool converged = true;
    std::vector<std::string> notes;

    friend bool operator==(const NormCertificate&, const NormCertificate&) = default;
};

nlohmann::ordered_json to_json(const NormCertificate& c);
NormCertificate certificate_from_json(const nlohmann::ordered_json& j);

/// l_u norm of v (u = inf gives the max modulus). Scaled to avoid overflow.
double lp_norm(std::span<const Scalar> v, const Exponent& u);

NormCertificate diagonal_norm_exact(const DiagonalOperator& op);

/// Sign-vertex enumeration limit: (number of l_inf slots) * N <= 24.
inline constexpr int max_vertex_bits = 24;

/// Exact ||T|| over l_inf^N in every input slot of a real form. With a target
/// exponent the form is read as an operator (trailing output slot) and the
/// l_q norm of the output is maximized. Throws std::invalid_argument for complex
/// forms or when the enumeration guard is exceeded.
NormCertificate vertex_bruteforce_norm(const DenseForm& t, std::optional<Exponent> q_target = std::nullopt);

struct AscentOptions {
    int restarts = 16;
    double rel_tol = 1e-10;
    int max_sweeps = 500;
    std::uint64_t seed = 0x5eed;
};

/// Lower bound for sup |T(x_1, ..., x_n)| over x_i in B_{l_{p_i}}. With a target
/// exponent the trailing slot is the output coordinate and is paired with l_{q'},
/// so the value bounds ||T : l_{p_1} x ... x l_{p_n} -> l_q||. Real forms are
/// maximized over real vectors only.
NormCertificate alternating_ascent_norm(const DenseForm& t, std::span<const Exponent> p_slots,
                                        std::optional<Exponent> q_target = std::nullopt,
                                        const AscentOptions& opts = {});

/// Maximizer of |<gamma, x>| over the unit ball of l_p (Hoelder equality vector).
/// Ties for p = 1 go to the lowest index.
Vector holder_maximizer(std::span<const Scalar> gamma, const Exponent& p, Field field);

/// w_s of (x^(1), ..., x^(M)) in l_p^N: the norm of gamma -> (gamma(x^(k)))_k from
/// l_{p'}^N to l_s^M. Exact for a single vector and for distinct canonical vectors;
/// otherwise an ascent lower bound with the analytic upper bound (sum_k ||x^(k)||_p^s)^{1/s}.
NormCertificate weak_s_norm(std::span<const Vector> vectors, const Exponent& s, const Exponent& p,
                            const AscentOptions& opts = {});

/// (sum_{k < m} |alpha_k|^u)^{1/u}, or the max for u = inf. Requires m <= alpha.size().
double partial_lu_norm(std::span<const Scalar> alpha, const Exponent& u, std::size_t m);

}  // namespace diaglab
