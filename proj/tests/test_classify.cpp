#include "doctest.h"

#include <cmath>
#include <numbers>

#include "diaglab/classify.hpp"
#include "golden.hpp"

using namespace diaglab;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

const std::vector<const char*> grid_exps = {"1", "5/4", "4/3", "3/2", "2", "3", "4", "inf"};

}  // namespace

TEST_CASE("operator classification golden cells") {
    for (const auto& cell : golden::operator_cells) {
        CAPTURE(cell.p);
        CAPTURE(cell.q);
        CAPTURE(cell.n);
        const Classification c = classify_operators(E(cell.p), E(cell.q), cell.n);
        for (std::size_t i = 0; i < 4; ++i) CHECK(render(c.spaces[i]) == render(golden::tag(cell.spaces[i])));
        const CoincidenceRows rows = coincidence_tables(E(cell.p), E(cell.q));
        CHECK(render(rows.table1) == cell.table1);
        CHECK(render(rows.table2) == cell.table2);
    }
}

TEST_CASE("form classification golden cells") {
    for (const auto& cell : golden::form_cells) {
        CAPTURE(cell.p);
        CAPTURE(cell.n);
        const Classification c = classify_forms(E(cell.p), cell.n);
        for (std::size_t i = 0; i < 4; ++i) CHECK(c.spaces[i] == golden::tag(cell.spaces[i]));
        CHECK_FALSE(c.q.has_value());
    }
    CHECK_THROWS_AS(classify_forms(E("2"), 1), std::invalid_argument);
}

TEST_CASE("classification examples") {
    const Classification a = classify_operators(E("1"), E("inf"), 3);
    CHECK(a.space(Ideal::nuclear) == SpaceTag::c0());
    CHECK(a.space(Ideal::integral) == SpaceTag::linf());
    CHECK(a.relations[0] == Relation::strict);
    CHECK(a.relations[1] == Relation::equal);
    CHECK(a.relations[2] == Relation::equal);

    const Classification b = classify_operators(E("3"), E("2"), 2);
    CHECK(render_chain(b) == "N = I = ℓ_1 ⊊ ℓ_2 = E ⊊ ℓ_∞ = L");

    const Classification c = classify_operators(E("3/2"), E("1"), 4);
    CHECK(c.space(Ideal::extendible) == SpaceTag::l(E("3/2")));

    const Classification f = classify_forms(E("4"), 3);
    CHECK(f.space(Ideal::extendible) == SpaceTag::l(E("1")));
    CHECK(f.space(Ideal::bounded) == SpaceTag::l(E("4")));
    CHECK_THROWS_AS(classify_operators(E("2"), E("2"), 0), std::invalid_argument);
}

TEST_CASE("bracket rendering keeps both ends") {
    const Classification c = classify_operators(E("3/2"), E("3/2"), 2);
    CHECK(c.space(Ideal::extendible).kind == SpaceTag::Kind::bracket);
    const std::string chain = render_chain(c);
    CHECK(chain == "N = I = ℓ_1 ⊊ ℓ_{3/2} ⊆ E ⊆ ℓ_{3+ε} ⊊ ℓ_∞ = L");
    CHECK(render(c.space(Ideal::extendible)) == "[ℓ_{3/2}, ℓ_{3+ε}]");
    CHECK(render_chain(classify_operators(E("1"), E("inf"), 2)) == "N = c_0 ⊊ ℓ_∞ = I = E = L");
}

TEST_CASE("SpaceTag normalization and validation") {
    CHECK(SpaceTag::l(Exponent::infinity()) == SpaceTag::linf());
    CHECK(SpaceTag::c0() != SpaceTag::linf());
    CHECK_THROWS_AS(SpaceTag::bracket(E("3"), E("2")), std::invalid_argument);
    CHECK_THROWS_AS(SpaceTag::bracket(E("2"), E("inf")), std::invalid_argument);
}

TEST_CASE("relations") {
    CHECK(relation(SpaceTag::l(E("1")), SpaceTag::l(E("1"))) == Relation::equal);
    CHECK(relation(SpaceTag::l(E("1")), SpaceTag::l(E("2"))) == Relation::strict);
    CHECK(relation(SpaceTag::c0(), SpaceTag::linf()) == Relation::strict);
    CHECK(relation(SpaceTag::l(E("1")), SpaceTag::bracket(E("2"), E("3"))) == Relation::strict);
    CHECK(relation(SpaceTag::l(E("2")), SpaceTag::bracket(E("2"), E("3"))) == Relation::unresolved);
    CHECK(relation(SpaceTag::bracket(E("2"), E("3")), SpaceTag::linf()) == Relation::strict);
    CHECK(relation(SpaceTag::bracket(E("2"), E("3")), SpaceTag::l(E("3"))) == Relation::unresolved);
    CHECK(marker(Relation::strict) == "⊊");
}

TEST_CASE("nesting holds on a dense grid") {
    for (const char* p : grid_exps) {
        for (int n = 1; n <= 5; ++n) {
            for (const char* q : grid_exps) CHECK(is_nested(classify_operators(E(p), E(q), n)));
            if (n >= 2) CHECK(is_nested(classify_forms(E(p), n)));
        }
    }
    Classification bad = classify_operators(E("3"), E("2"), 2);
    std::swap(bad.spaces[0], bad.spaces[3]);
    CHECK_FALSE(is_nested(bad));
}

TEST_CASE("coincidence tables agree with the classification") {
    for (const char* p : grid_exps) {
        for (const char* q : grid_exps) {
            for (int n = 1; n <= 4; ++n) {
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(n);
                CHECK(coincidence_tables(E(p), E(q)) == rows_from_classification(classify_operators(E(p), E(q), n)));
            }
        }
    }
}

TEST_CASE("table examples") {
    CHECK(render(coincidence_tables(E("1"), E("inf")).table1) == "N ≠ I");
    CHECK(render(coincidence_tables(E("1"), E("inf")).table2) == "I = E = L");
    CHECK(render(coincidence_tables(E("3"), E("1")).table2) == "I = E ≠ L");
    CHECK(render(coincidence_tables(E("3/2"), E("3/2")).table2) == "I ≠ E ≠ L");
}

TEST_CASE("forms with n+1 slots match operators into l_{p'} for N and I") {
    for (const char* ps : grid_exps) {
        const Exponent p = E(ps);
        for (int n = 1; n <= 4; ++n) {
            const Classification f = classify_forms(p, n + 1);
            const Classification o = classify_operators(p, conjugate(p), n);
            CHECK(f.space(Ideal::nuclear) == o.space(Ideal::nuclear));
            CHECK(f.space(Ideal::integral) == o.space(Ideal::integral));
        }
    }
}

TEST_CASE("power membership") {
    CHECK(power_membership(Rational(1), SpaceTag::l(E("1"))) == Membership::non_member);
    CHECK(power_membership(Rational(3, 5), SpaceTag::l(E("2"))) == Membership::member);
    CHECK(power_membership(Rational(0), SpaceTag::c0()) == Membership::non_member);
    CHECK(power_membership(Rational(0), SpaceTag::linf()) == Membership::member);
    CHECK(power_membership(Rational(1, 100), SpaceTag::c0()) == Membership::member);
    const SpaceTag b = SpaceTag::bracket(E("2"), E("4"));
    CHECK(power_membership(Rational(3, 5), b) == Membership::member);
    CHECK(power_membership(Rational(1, 5), b) == Membership::non_member);
    CHECK(power_membership(Rational(1, 4), b) == Membership::unresolved);
    CHECK(power_membership(Rational(1, 2), b) == Membership::unresolved);
    CHECK_THROWS_AS(power_membership(Rational(-1), b), std::invalid_argument);
}

TEST_CASE("growth scan examples") {
    const GrowthScan a = growth_scan(E("inf"), E("1"), 1, GrowthIdeal::bounded, Rational(9, 10));
    CHECK(a.growth_exponent == doctest::Approx(0.1).epsilon(0.05));
    CHECK_FALSE(a.bounded);
    CHECK(a.agrees);

    const GrowthScan b = growth_scan(E("inf"), E("1"), 1, GrowthIdeal::bounded, Rational(11, 10));
    CHECK(b.bounded);
    CHECK(b.agrees);
    // partial sums converge to zeta(1.1) ~ 10.58 slowly; they stay below it.
    CHECK(b.norms.back() < 10.5844);

    const GrowthScan c = growth_scan(E("2"), E("2"), 2, GrowthIdeal::nuclear_integral, Rational(2));
    CHECK(c.u == E("1"));
    CHECK(c.bounded);
    CHECK(c.agrees);
    CHECK(c.norms.back() == doctest::Approx(std::pow(std::numbers::pi, 2) / 6).epsilon(1e-4));

    CHECK_THROWS_AS(parse_growth_ideal("E"), std::invalid_argument);
    CHECK(parse_growth_ideal("N") == GrowthIdeal::nuclear_integral);
}

TEST_CASE("growth scan: harmonic partial sums grow like log N") {
    // Oracle: direct harmonic sums on the same grid.
    const GrowthScan g = growth_scan(E("inf"), E("1"), 1, GrowthIdeal::bounded, Rational(1), dyadic_grid(4, 10));
    for (std::size_t i = 0; i < g.grid.size(); ++i) {
        double h = 0;
        for (std::size_t k = g.grid[i]; k >= 1; --k) h += 1.0 / static_cast<double>(k);
        CHECK(g.norms[i] == doctest::Approx(h).epsilon(1e-13));
    }
}

TEST_CASE("growth scan agrees with membership away from criticality") {
    struct Case {
        const char* p;
        const char* q;
        int n;
        GrowthIdeal ideal;
    };
    const Case cases[] = {
        {"3/2", "4", 2, GrowthIdeal::nuclear_integral}, {"1", "2", 3, GrowthIdeal::nuclear_integral},
        {"6", "1", 2, GrowthIdeal::bounded},            {"inf", "2", 1, GrowthIdeal::bounded},
        {"5/4", "inf", 3, GrowthIdeal::nuclear_integral}, {"2", "2", 2, GrowthIdeal::bounded},
    };
    for (const auto& cs : cases) {
        const GrowthScan probe = growth_scan(E(cs.p), E(cs.q), cs.n, cs.ideal, Rational(1), dyadic_grid(4, 5));
        const Rational crit = probe.u.reciprocal();
        for (const Rational& off : {Rational(-1, 5), Rational(1, 5)}) {
            const Rational s = crit + off;
            if (s < Rational(0)) continue;
            const GrowthScan g = growth_scan(E(cs.p), E(cs.q), cs.n, cs.ideal, s);
            CAPTURE(cs.p);
            CAPTURE(to_string(s));
            CHECK(g.agrees);
        }
    }
}

TEST_CASE("classification JSON round trip") {
    for (const auto& cell : golden::operator_cells) {
        const Classification c = classify_operators(E(cell.p), E(cell.q), cell.n);
        const auto j = to_json(c);
        CHECK(j.at("ideals").size() == 4);
        CHECK(j.at("ideals")[0].at("space").contains("kind"));
        CHECK(classification_from_json(j) == c);
    }
    const Classification f = classify_forms(E("5/4"), 3);
    CHECK(classification_from_json(to_json(f)) == f);
}
