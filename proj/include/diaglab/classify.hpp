#pragma once

/**
 * @file classify.hpp
 * @brief Sequence spaces l_n(A, p, q) and l_n(A, p) for A in {N, I, E, L}.
 *
 * classify_operators / classify_forms return the space attached to each ideal
 * as a SpaceTag. The one region where only an estimate is known
 * (1 < p < 2, 1 < q <= p') is kept as a bracket [l_a, l_{b+eps}] and never
 * collapsed. growth_scan checks the tags against finite-section norms of
 * power sequences k^{-s}.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diaglab/exponent.hpp"

namespace diaglab {

enum class Ideal { nuclear, integral, extendible, bounded };

inline constexpr std::array<Ideal, 4> all_ideals = {Ideal::nuclear, Ideal::integral, Ideal::extendible,
                                                    Ideal::bounded};

/// "N", "I", "E", "L".
std::string ideal_letter(Ideal a);

struct SpaceTag {
    enum class Kind { lu, c0, linf, bracket };

    Kind kind = Kind::linf;
    /// u for l_u; the lower end a for a bracket.
    std::optional<Exponent> exponent;
    /// b for a bracket [l_a, l_{b+eps}].
    std::optional<Exponent> upper;

    /// l_u, normalized to linf when u = inf.
    static SpaceTag l(const Exponent& u);
    static SpaceTag c0() { return {Kind::c0, std::nullopt, std::nullopt}; }
    static SpaceTag linf() { return {Kind::linf, std::nullopt, std::nullopt}; }
    static SpaceTag bracket(const Exponent& a, const Exponent& b);

    friend bool operator==(const SpaceTag&, const SpaceTag&) = default;
};

/// "l_1", "l_{3/2}", "c_0", "l_inf", or "l_{3/2} ⊆ E ⊆ l_{3+ε}" style for brackets.
std::string render(const SpaceTag& s);

enum class Relation { equal, strict, unresolved };

/// Relation between consecutive spaces small ⊆ large.
Relation relation(const SpaceTag& small, const SpaceTag& large);
/// "=", "⊊", "⊆".
std::string marker(Relation r);

struct Classification {
    std::string family;  ///< "operators" or "forms"
    Exponent p = Exponent::one();
    std::optional<Exponent> q;
    int n = 1;
    std::array<SpaceTag, 4> spaces;     ///< indexed by Ideal
    std::array<Relation, 3> relations;  ///< N-I, I-E, E-L

    const SpaceTag& space(Ideal a) const { return spaces[static_cast<std::size_t>(a)]; }

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// l_n(A, p, q) for diagonal n-linear operators l_p -> l_q.
Classification classify_operators(const Exponent& p, const Exponent& q, int n);

/// l_n(A, p) for diagonal n-linear forms on l_p. Requires n >= 2.
Classification classify_forms(const Exponent& p, int n);

/// Every consecutive pair is nested in the order l_u (u increasing) < c_0 < l_inf.
bool is_nested(const Classification& c);

/// Chain in the layout "N = I = l_1 ⊊ l_2 = E ⊊ l_inf = L".
std::string render_chain(const Classification& c);

enum class Table1Row { nuclear_ne_integral, nuclear_eq_integral };
enum class Table2Row { all_equal, ie_equal_l_differs, i_differs_el_equal, all_differ };

std::string render(Table1Row r);
std::string render(Table2Row r);

struct CoincidenceRows {
    Table1Row table1;
    Table2Row table2;
    friend bool operator==(const CoincidenceRows&, const CoincidenceRows&) = default;
};

/// Rows read off the (p, q) conditions of the two coincidence tables.
CoincidenceRows coincidence_tables(const Exponent& p, const Exponent& q);

/// Rows implied by the equalities in a classification.
CoincidenceRows rows_from_classification(const Classification& c);

enum class Membership { member, non_member, unresolved };
std::string to_string(Membership m);

/// Membership of k^{-s} (s >= 0): l_u iff s u > 1; c_0 iff s > 0; l_inf always.
/// Brackets [l_a, l_{b+}]: member if s > 1/a, non-member if s < 1/b, otherwise unresolved.
Membership power_membership(const Rational& s, const SpaceTag& tag);

enum class GrowthIdeal { nuclear_integral, bounded };
std::string to_string(GrowthIdeal g);
GrowthIdeal parse_growth_ideal(std::string_view text);

struct GrowthScan {
    Exponent p = Exponent::one();
    Exponent q = Exponent::one();
    int n = 1;
    GrowthIdeal ideal = GrowthIdeal::bounded;
    Rational s;
    Exponent u = Exponent::one();      ///< exponent of the exact finite-section formula
    std::vector<std::size_t> grid;
    std::vector<double> norms;
    double increment_slope = 0;        ///< slope of log(norm_{2N}^u - norm_N^u) vs log N
    double growth_exponent = 0;        ///< estimated exponent of norm_N ~ N^gamma
    bool bounded = false;
    SpaceTag tag;                      ///< classification space for the ideal
    Membership expected = Membership::unresolved;
    bool agrees = false;
    std::vector<std::string> notes;
};

inline constexpr double growth_threshold = 0.02;

/// Dyadic grid 2^lo .. 2^hi.
std::vector<std::size_t> dyadic_grid(int lo = 4, int hi = 14);

GrowthScan growth_scan(const Exponent& p, const Exponent& q, int n, GrowthIdeal ideal, const Rational& s,
                       const std::vector<std::size_t>& grid = dyadic_grid());

nlohmann::ordered_json to_json(const SpaceTag& s);
SpaceTag space_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const Classification& c);
Classification classification_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const CoincidenceRows& r);
nlohmann::ordered_json to_json(const GrowthScan& g);

}  // namespace diaglab
