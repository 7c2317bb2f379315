#include "diaglab/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "diaglab/ideals.hpp"
#include "diaglab/norms.hpp"

namespace diaglab {

using nlohmann::ordered_json;

std::string ideal_letter(Ideal a) {
    switch (a) {
        case Ideal::nuclear: return "N";
        case Ideal::integral: return "I";
        case Ideal::extendible: return "E";
        case Ideal::bounded: return "L";
    }
    return "?";
}

namespace {

Ideal parse_ideal(std::string_view s) {
    for (Ideal a : all_ideals) {
        if (ideal_letter(a) == s) return a;
    }
    throw std::invalid_argument("unknown ideal '" + std::string(s) + "'");
}

// Position of a space in the chain l_u (u finite, increasing) < c_0 < l_inf.
struct Key {
    int cls = 0;
    Exponent u = Exponent::one();
};

int compare(const Key& a, const Key& b) {
    if (a.cls != b.cls) return a.cls < b.cls ? -1 : 1;
    if (a.cls != 0 || a.u == b.u) return 0;
    return a.u < b.u ? -1 : 1;
}

Key key_of(const SpaceTag& s) {
    switch (s.kind) {
        case SpaceTag::Kind::lu: return {0, *s.exponent};
        case SpaceTag::Kind::c0: return {1, Exponent::one()};
        case SpaceTag::Kind::linf: return {2, Exponent::one()};
        case SpaceTag::Kind::bracket: return {0, *s.exponent};
    }
    return {};
}

std::string exponent_label(const Exponent& u) {
    const std::string s = u.to_string();
    if (s.size() == 1) return s;
    return "{" + s + "}";
}

std::string plus_eps_label(const Exponent& b) { return "{" + b.to_string() + "+ε}"; }

}  // namespace

SpaceTag SpaceTag::l(const Exponent& u) {
    if (u.is_infinite()) return linf();
    return {Kind::lu, u, std::nullopt};
}

SpaceTag SpaceTag::bracket(const Exponent& a, const Exponent& b) {
    if (a.is_infinite() || b.is_infinite() || b < a) {
        throw std::invalid_argument("bracket needs finite a <= b");
    }
    return {Kind::bracket, a, b};
}

std::string render(const SpaceTag& s) {
    switch (s.kind) {
        case SpaceTag::Kind::lu: return "ℓ_" + exponent_label(*s.exponent);
        case SpaceTag::Kind::c0: return "c_0";
        case SpaceTag::Kind::linf: return "ℓ_∞";
        case SpaceTag::Kind::bracket:
            return "[ℓ_" + exponent_label(*s.exponent) + ", ℓ_" + plus_eps_label(*s.upper) + "]";
    }
    return "?";
}

Relation relation(const SpaceTag& small, const SpaceTag& large) {
    if (small == large) {
        return small.kind == SpaceTag::Kind::bracket ? Relation::unresolved : Relation::equal;
    }
    const bool sb = small.kind == SpaceTag::Kind::bracket;
    const bool lb = large.kind == SpaceTag::Kind::bracket;
    if (!sb && !lb) return Relation::strict;
    if (lb && !sb) {
        // small ⊆ l_a ⊆ E: strict only if small is strictly below l_a.
        return compare(key_of(small), key_of(large)) < 0 ? Relation::strict : Relation::unresolved;
    }
    if (sb && !lb) {
        // E ⊆ l_{b+eps} for every eps: strict if large is strictly above l_b.
        const Key b{0, *small.upper};
        return compare(b, key_of(large)) < 0 ? Relation::strict : Relation::unresolved;
    }
    return Relation::unresolved;
}

std::string marker(Relation r) {
    switch (r) {
        case Relation::equal: return "=";
        case Relation::strict: return "⊊";
        case Relation::unresolved: return "⊆";
    }
    return "?";
}

namespace {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::equal: return "equal";
        case Relation::strict: return "strict";
        case Relation::unresolved: return "unresolved";
    }
    return "?";
}

Relation parse_relation(std::string_view s) {
    if (s == "equal") return Relation::equal;
    if (s == "strict") return Relation::strict;
    if (s == "unresolved") return Relation::unresolved;
    throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

void fill_relations(Classification& c) {
    for (std::size_t i = 0; i < 3; ++i) c.relations[i] = relation(c.spaces[i], c.spaces[i + 1]);
}

SpaceTag extendible_operator_space(const Exponent& p, const Exponent& q) {
    const Exponent one = Exponent::one();
    if (p == one) return SpaceTag::linf();
    if (p >= Exponent(2)) return SpaceTag::l(q);
    const Exponent pc = conjugate(p);
    if (q == one) return SpaceTag::l(half_conjugate(p));
    if (q > pc) return SpaceTag::l(q);
    return SpaceTag::bracket(q, pc);
}

}  // namespace

Classification classify_operators(const Exponent& p, const Exponent& q, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    Classification c;
    c.family = "operators";
    c.p = p;
    c.q = q;
    c.n = n;

    const HolderResult h = holder_r(p, q, n);
    const SpaceTag l_space = h.bounded() ? SpaceTag::linf() : SpaceTag::l(*h.r);

    SpaceTag n_space = SpaceTag::l(nuclear_t(p, q, n));
    SpaceTag i_space = n_space;
    if (p == Exponent::one() && q.is_infinite()) {
        n_space = SpaceTag::c0();
        i_space = SpaceTag::linf();
    }
    c.spaces = {n_space, i_space, extendible_operator_space(p, q), l_space};
    fill_relations(c);
    return c;
}

Classification classify_forms(const Exponent& p, int n) {
    if (n < 2) throw std::invalid_argument("forms need arity >= 2");
    Classification c;
    c.family = "forms";
    c.p = p;
    c.n = n;

    const Exponent one = Exponent::one();
    if (p == one) {
        c.spaces = {SpaceTag::c0(), SpaceTag::linf(), SpaceTag::linf(), SpaceTag::linf()};
    } else if (p < Exponent(2)) {
        // max(p'/n, 1) has reciprocal min(n/p', 1).
        const Rational recip = std::min(Rational(n) * conjugate(p).reciprocal(), Rational(1));
        const SpaceTag ni = SpaceTag::l(Exponent::from_reciprocal(recip));
        c.spaces = {ni, ni, SpaceTag::l(half_conjugate(p)), SpaceTag::linf()};
    } else if (!p.is_infinite()) {
        const SpaceTag l1 = SpaceTag::l(one);
        const SpaceTag l_space = Rational(n) < p.value()
                                     ? SpaceTag::l(Exponent::from_reciprocal(Rational(1) - Rational(n) / p.value()))
                                     : SpaceTag::linf();
        c.spaces = {l1, l1, l1, l_space};
    } else {
        const SpaceTag l1 = SpaceTag::l(one);
        c.spaces = {l1, l1, l1, l1};
    }
    fill_relations(c);
    return c;
}

bool is_nested(const Classification& c) {
    for (const SpaceTag& s : c.spaces) {
        if (s.kind == SpaceTag::Kind::bracket && *s.upper < *s.exponent) return false;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const SpaceTag& a = c.spaces[i];
        const SpaceTag& b = c.spaces[i + 1];
        const Key hi = a.kind == SpaceTag::Kind::bracket ? Key{0, *a.upper} : key_of(a);
        if (compare(hi, key_of(b)) > 0) return false;
    }
    return true;
}

std::string render_chain(const Classification& c) {
    // Group ideals joined by "=" and print each group with its space.
    std::string out;
    std::size_t i = 0;
    bool first = true;
    while (i < 4) {
        std::size_t j = i;
        while (j < 3 && c.relations[j] == Relation::equal) ++j;
        const SpaceTag& s = c.spaces[i];

        std::string letters;
        for (std::size_t k = i; k <= j; ++k) {
            if (k > i) letters += " = ";
            letters += ideal_letter(static_cast<Ideal>(k));
        }
        std::string group;
        if (s.kind == SpaceTag::Kind::bracket) {
            group = "ℓ_" + exponent_label(*s.exponent) + " ⊆ " + letters + " ⊆ ℓ_" + plus_eps_label(*s.upper);
        } else if (first) {
            group = letters + " = " + render(s);
        } else {
            group = render(s) + " = " + letters;
        }
        if (!first) out += " " + marker(c.relations[i - 1]) + " ";
        out += group;
        first = false;
        i = j + 1;
    }
    return out;
}

std::string render(Table1Row r) {
    return r == Table1Row::nuclear_ne_integral ? "N ≠ I" : "N = I";
}

std::string render(Table2Row r) {
    switch (r) {
        case Table2Row::all_equal: return "I = E = L";
        case Table2Row::ie_equal_l_differs: return "I = E ≠ L";
        case Table2Row::i_differs_el_equal: return "I ≠ E = L";
        case Table2Row::all_differ: return "I ≠ E ≠ L";
    }
    return "?";
}

CoincidenceRows coincidence_tables(const Exponent& p, const Exponent& q) {
    const Exponent one = Exponent::one();
    const bool p1 = p == one;
    const bool pinf = p.is_infinite();
    const bool q1 = q == one;
    const bool qinf = q.is_infinite();

    CoincidenceRows rows{};
    rows.table1 = (p1 && qinf) ? Table1Row::nuclear_ne_integral : Table1Row::nuclear_eq_integral;

    if ((p1 && qinf) || (pinf && q1)) {
        rows.table2 = Table2Row::all_equal;
    } else if (p >= Exponent(2) && !pinf && q1) {
        rows.table2 = Table2Row::ie_equal_l_differs;
    } else if ((p1 && !qinf) || (!p1 && !pinf && qinf) || (pinf && !q1)) {
        rows.table2 = Table2Row::i_differs_el_equal;
    } else {
        // 1 < p < 2 with q = 1, or 1 < p, q < inf.
        rows.table2 = Table2Row::all_differ;
    }
    return rows;
}

CoincidenceRows rows_from_classification(const Classification& c) {
    CoincidenceRows rows{};
    rows.table1 = c.relations[0] == Relation::equal ? Table1Row::nuclear_eq_integral : Table1Row::nuclear_ne_integral;
    const bool ie = c.relations[1] == Relation::equal;
    const bool el = c.relations[2] == Relation::equal;
    if (ie && el) {
        rows.table2 = Table2Row::all_equal;
    } else if (ie) {
        rows.table2 = Table2Row::ie_equal_l_differs;
    } else if (el) {
        rows.table2 = Table2Row::i_differs_el_equal;
    } else {
        rows.table2 = Table2Row::all_differ;
    }
    return rows;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::member: return "member";
        case Membership::non_member: return "non-member";
        case Membership::unresolved: return "unresolved";
    }
    return "?";
}

Membership power_membership(const Rational& s, const SpaceTag& tag) {
    if (s < 0) throw std::invalid_argument("decay s must be >= 0");
    auto in_lu = [&](const Exponent& u) { return s * u.value() > 1; };
    switch (tag.kind) {
        case SpaceTag::Kind::lu: return in_lu(*tag.exponent) ? Membership::member : Membership::non_member;
        case SpaceTag::Kind::c0: return s > 0 ? Membership::member : Membership::non_member;
        case SpaceTag::Kind::linf: return Membership::member;
        case SpaceTag::Kind::bracket:
            if (in_lu(*tag.exponent)) return Membership::member;
            // k^{-1/b} lies in every l_{b+eps}, so only s < 1/b is decided.
            if (s * tag.upper->value() < 1) return Membership::non_member;
            return Membership::unresolved;
    }
    return Membership::unresolved;
}

std::string to_string(GrowthIdeal g) { return g == GrowthIdeal::nuclear_integral ? "N/I" : "L"; }

GrowthIdeal parse_growth_ideal(std::string_view text) {
    if (text == "N" || text == "I" || text == "NI" || text == "N/I") return GrowthIdeal::nuclear_integral;
    if (text == "L") return GrowthIdeal::bounded;
    if (text == "E") {
        throw std::invalid_argument("no exact finite-section formula for E; use the extendible diagnostic");
    }
    throw std::invalid_argument("unknown ideal '" + std::string(text) + "'");
}

std::vector<std::size_t> dyadic_grid(int lo, int hi) {
    if (lo < 0 || hi < lo || hi > 40) throw std::invalid_argument("bad dyadic grid bounds");
    std::vector<std::size_t> g;
    for (int e = lo; e <= hi; ++e) g.push_back(std::size_t{1} << e);
    return g;
}

namespace {

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx == 0 ? 0.0 : sxy / sxx;
}

}  // namespace

GrowthScan growth_scan(const Exponent& p, const Exponent& q, int n, GrowthIdeal ideal, const Rational& s,
                       const std::vector<std::size_t>& grid) {
    if (s < 0) throw std::invalid_argument("decay s must be >= 0");
    if (grid.size() < 2) throw std::invalid_argument("growth grid needs at least two sizes");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
            throw std::invalid_argument("growth grid must be strictly increasing and positive");
        }
    }

    GrowthScan g;
    g.p = p;
    g.q = q;
    g.n = n;
    g.ideal = ideal;
    g.s = s;
    g.grid = grid;

    const Classification c = classify_operators(p, q, n);
    if (ideal == GrowthIdeal::nuclear_integral) {
        g.u = nuclear_t(p, q, n);
        g.tag = c.space(Ideal::integral);
        if (c.space(Ideal::nuclear) != g.tag) {
            g.notes.push_back("finite sections see the integral norm; N = c_0 differs from I only at infinity");
        }
    } else {
        const HolderResult h = holder_r(p, q, n);
        g.u = h.bounded() ? Exponent::infinity() : *h.r;
        g.tag = c.space(Ideal::bounded);
    }

    const double sd = to_double(s);
    DiagonalOperator op;
    op.arity = n;
    op.p = p;
    op.q = q;
    for (std::size_t N : grid) {
        op.alpha.resize(N);
        for (std::size_t k = 0; k < N; ++k) op.alpha[k] = std::pow(static_cast<double>(k + 1), -sd);
        const double v = ideal == GrowthIdeal::nuclear_integral ? nuclear_integral_exact(op).integral.value
                                                                : diagonal_norm_exact(op).value;
        g.norms.push_back(v);
    }

    if (g.u.is_infinite()) {
        // sup norm of a nonincreasing sequence: constant.
        std::vector<double> x, y;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            x.push_back(std::log(static_cast<double>(grid[i])));
            y.push_back(std::log(g.norms[i]));
        }
        g.increment_slope = least_squares_slope(x, y);
        g.growth_exponent = std::max(g.increment_slope, 0.0);
    } else {
        // norm_N^u is a partial sum; its increments decay like N^{1 - s u}.
        const double u = g.u.to_double();
        std::vector<double> x, y;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double a = std::pow(g.norms[i], u);
            const double b = std::pow(g.norms[i + 1], u);
            const double d = b - a;
            if (d > 1e-12 * b) {
                x.push_back(std::log(static_cast<double>(grid[i])));
                y.push_back(std::log(d));
            }
        }
        if (x.size() < 2) {
            g.notes.push_back("increments below round-off: partial sums have converged");
            g.increment_slope = -INFINITY;
            g.growth_exponent = 0;
        } else {
            g.increment_slope = least_squares_slope(x, y);
            g.growth_exponent = std::max(g.increment_slope, 0.0) / u;
        }
    }
    g.bounded = g.growth_exponent < growth_threshold;
    g.expected = power_membership(s, g.tag);
    g.agrees = g.expected != Membership::unresolved && g.bounded == (g.expected == Membership::member);
    return g;
}

ordered_json to_json(const SpaceTag& s) {
    ordered_json j;
    switch (s.kind) {
        case SpaceTag::Kind::lu:
            j["kind"] = "lu";
            j["exponent"] = s.exponent->to_string();
            break;
        case SpaceTag::Kind::c0: j["kind"] = "c0"; break;
        case SpaceTag::Kind::linf: j["kind"] = "linf"; break;
        case SpaceTag::Kind::bracket:
            j["kind"] = "bracket";
            j["exponent"] = s.exponent->to_string();
            j["upper"] = s.upper->to_string();
            break;
    }
    return j;
}

SpaceTag space_from_json(const ordered_json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lu") return SpaceTag::l(Exponent::parse(j.at("exponent").get<std::string>()));
    if (kind == "c0") return SpaceTag::c0();
    if (kind == "linf") return SpaceTag::linf();
    if (kind == "bracket") {
        return SpaceTag::bracket(Exponent::parse(j.at("exponent").get<std::string>()),
                                 Exponent::parse(j.at("upper").get<std::string>()));
    }
    throw std::invalid_argument("unknown space kind '" + kind + "'");
}

ordered_json to_json(const Classification& c) {
    ordered_json j;
    j["family"] = c.family;
    j["p"] = c.p.to_string();
    j["q"] = c.q ? ordered_json(c.q->to_string()) : ordered_json(nullptr);
    j["n"] = c.n;
    ordered_json ideals = ordered_json::array();
    for (Ideal a : all_ideals) {
        ideals.push_back({{"ideal", ideal_letter(a)}, {"space", to_json(c.space(a))}});
    }
    j["ideals"] = ideals;
    ordered_json rels = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        rels.push_back({{"from", ideal_letter(static_cast<Ideal>(i))},
                        {"to", ideal_letter(static_cast<Ideal>(i + 1))},
                        {"relation", relation_name(c.relations[i])},
                        {"marker", marker(c.relations[i])}});
    }
    j["relations"] = rels;
    j["chain"] = render_chain(c);
    return j;
}

Classification classification_from_json(const ordered_json& j) {
    Classification c;
    c.family = j.at("family").get<std::string>();
    c.p = Exponent::parse(j.at("p").get<std::string>());
    if (!j.at("q").is_null()) c.q = Exponent::parse(j.at("q").get<std::string>());
    c.n = j.at("n").get<int>();
    const auto& ideals = j.at("ideals");
    if (ideals.size() != 4) throw std::invalid_argument("classification needs four ideals");
    for (const auto& e : ideals) {
        c.spaces[static_cast<std::size_t>(parse_ideal(e.at("ideal").get<std::string>()))] =
            space_from_json(e.at("space"));
    }
    const auto& rels = j.at("relations");
    if (rels.size() != 3) throw std::invalid_argument("classification needs three relations");
    for (std::size_t i = 0; i < 3; ++i) c.relations[i] = parse_relation(rels[i].at("relation").get<std::string>());
    return c;
}

ordered_json to_json(const CoincidenceRows& r) {
    return {{"table1", render(r.table1)}, {"table2", render(r.table2)}};
}

ordered_json to_json(const GrowthScan& g) {
    ordered_json j;
    j["p"] = g.p.to_string();
    j["q"] = g.q.to_string();
    j["n"] = g.n;
    j["ideal"] = to_string(g.ideal);
    j["s"] = to_string(g.s);
    j["u"] = g.u.to_string();
    j["grid"] = g.grid;
    j["norms"] = g.norms;
    j["increment_slope"] = std::isfinite(g.increment_slope) ? ordered_json(g.increment_slope) : ordered_json(nullptr);
    j["growth_exponent"] = g.growth_exponent;
    j["threshold"] = growth_threshold;
    j["bounded"] = g.bounded;
    j["space"] = to_json(g.tag);
    j["expected"] = to_string(g.expected);
    j["agrees"] = g.agrees;
    j["notes"] = g.notes;
    return j;
}

}  // namespace diaglab
