#pragma once

/**
 * @file ideals.hpp
 * @brief Nuclear, integral and extendible norms of diagonal operators.
 *
 * Exact values come from closed forms (||alpha||_t, ||alpha||_q). Everything
 * else is emitted as a certificate with an explicit kind: factorization
 * certificates carry each leg so the product can be recomputed offline, and
 * the duality lower bound carries its dual sequence beta.
 */

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diaglab/exponent.hpp"
#include "diaglab/multilinear.hpp"
#include "diaglab/norms.hpp"

namespace diaglab {

struct FactorizationLeg {
    std::string name;     ///< e.g. "D_eta", "xi_N", "id"
    std::string from;     ///< source space, e.g. "l_4/3"
    std::string to;       ///< target space, e.g. "l_1"
    Vector sequence;      ///< diagonal sequence, empty for non-diagonal legs
    double norm = 0;
    int multiplicity = 1; ///< number of slots using this leg

    friend bool operator==(const FactorizationLeg&, const FactorizationLeg&) = default;
};

struct FactorizationCertificate {
    std::string method;
    CertKind kind = CertKind::upper;
    std::vector<FactorizationLeg> legs;
    std::string middle;          ///< the factored object, e.g. "Psi = T_(1,1,...)"
    std::string middle_ideal;    ///< ideal whose norm is used for the middle object
    double middle_norm = 1;
    std::string middle_fact;     ///< where the middle norm comes from
    double scale = 1;            ///< constant prefactor (1/N^2 for the Phi_N chain)
    double bound = 0;
    /// max |product of leg sequences - alpha| for diagonal factorizations.
    double reconstruction_residual = 0;
    std::vector<std::string> notes;

    /// scale * middle_norm * prod legs[i].norm^multiplicity.
    double product() const;
    NormCertificate as_certificate() const;

    friend bool operator==(const FactorizationCertificate&, const FactorizationCertificate&) = default;
};

nlohmann::ordered_json to_json(const FactorizationCertificate& f);
FactorizationCertificate factorization_from_json(const nlohmann::ordered_json& j);

struct NuclearIntegral {
    NormCertificate nuclear;
    NormCertificate integral;
    Exponent t = Exponent::one();
    /// True for p = 1, q = inf: the infinite sequence is nuclear iff alpha is in c_0.
    bool nuclear_requires_c0 = false;
};

/// ||T_alpha||_N = ||T_alpha||_I = ||alpha||_t on finite sections.
NuclearIntegral nuclear_integral_exact(const DiagonalOperator& op);

/// D_nu o Psi o (D_eta, ..., D_eta) with eta = |alpha|^{t/p'}, nu = phase(alpha) |alpha|^{t/q}.
/// Requires p > 1 and t > 1.
FactorizationCertificate nuclear_upper_factorization(const DiagonalOperator& op);

/// |sum alpha_k beta_k| / ||T_beta : l_{p'}^n -> l_{q'}|| with the Hoelder equality
/// witness beta in the unit ball of l_{t'}.
NormCertificate integral_lower_duality(const DiagonalOperator& op);

/// ||T_alpha||_E <= ||alpha||_q through l_inf^n.
NormCertificate extendible_upper_linfty(const DiagonalOperator& op);

/// Upper bound ||alpha||_{p'/2} for the extendible norm of phi_alpha on l_p
/// (1 < p < 2, n >= 2) from the factorization through (D_sigma, D_sigma', id, ...).
FactorizationCertificate extendible_upper_sqrt(std::span<const Scalar> alpha, const Exponent& p, int n,
                                               Field field = Field::real);

struct LNormLeg {
    double value = 0;          ///< the value used in the chain (N^2)
    CertKind verified_kind;    ///< exact (enumeration) or lower (ascent)
    std::string method;
    double verified_value = 0; ///< enumeration value, or the ascent lower bound
    double analytic_upper = 0; ///< N ||x_1||_2 ||x_2||_2 <= N^2 on the l_inf ball
    bool consistent = false;   ///< verified value matches N^2 within 1e-6 (relative)
};

struct PhiCertificate {
    FactorizationCertificate chain;
    LNormLeg l_norm;
    std::size_t dimension = 0;
    int arity = 0;
    Field field = Field::real;
};

/// ||Phi_N||_E on l_1 x l_1 x l_{p_1} x ... x l_{p_{n-2}} is at most
/// (1/N^2) ||L_N|| ||xi_N||^2 prod ||id: l_{p_i} -> l_inf|| = 1.
/// Real field uses Hadamard (N a power of two), complex uses Fourier.
PhiCertificate phi_extendibility_certificate(std::size_t n_dim, int n, std::span<const Exponent> p_rest,
                                             Field field = Field::real, const AscentOptions& opts = {});

struct DiagnosticSeries {
    Exponent u = Exponent::one();
    std::string label;
    std::vector<std::size_t> prefix;  ///< prefix lengths M (dyadic, ending at N)
    std::vector<double> values;       ///< partial l_u norms at each M
    double slope = 0;                 ///< least-squares slope of log value vs log M
};

struct ExtendibleDiagnostic {
    std::string regime;
    std::vector<DiagnosticSeries> series;
    std::vector<std::string> notes;
};

inline const std::vector<Rational> default_epsilon_grid = {Rational(1, 2), Rational(1, 10), Rational(1, 100)};

/// Summability statistic that bounds membership in l_n(E, p, q); no constants
/// are claimed. Requires p > 1.
ExtendibleDiagnostic extendible_lower_diagnostic(const DiagonalOperator& op,
                                                 std::span<const Rational> eps_grid = default_epsilon_grid);

nlohmann::ordered_json to_json(const PhiCertificate& c);
nlohmann::ordered_json to_json(const ExtendibleDiagnostic& d);
nlohmann::ordered_json to_json(const NuclearIntegral& r);

}  // namespace diaglab
