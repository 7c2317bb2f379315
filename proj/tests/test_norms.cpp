#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "diaglab/norms.hpp"

using namespace diaglab;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

DiagonalOperator diag(int n, Vector alpha, const char* p, const char* q) {
    DiagonalOperator op;
    op.arity = n;
    op.alpha = std::move(alpha);
    op.p = E(p);
    op.q = E(q);
    return op;
}

// Grid search over the unit sphere of l_p^2 with all slots equal to x
// (optimal for diagonal maps by Hoelder). Returns ||(alpha_k x_k^n)||_q.
double grid_oracle_2d(const DiagonalOperator& op, int steps) {
    const double p = op.p.to_double();
    double best = 0;
    for (int i = 0; i <= steps; ++i) {
        const double th = 0.5 * std::numbers::pi * i / steps;
        double a = std::cos(th), b = std::sin(th);
        double nrm = std::isinf(p) ? std::max(a, b) : std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
        a /= nrm;
        b /= nrm;
        const double y0 = std::abs(op.alpha[0]) * std::pow(a, op.arity);
        const double y1 = std::abs(op.alpha[1]) * std::pow(b, op.arity);
        const double q = op.q.to_double();
        const double v = std::isinf(q) ? std::max(y0, y1) : std::pow(std::pow(y0, q) + std::pow(y1, q), 1.0 / q);
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

TEST_CASE("lp_norm") {
    const Vector v{3, -4};
    CHECK(lp_norm(v, E("2")) == doctest::Approx(5.0));
    CHECK(lp_norm(v, E("1")) == doctest::Approx(7.0));
    CHECK(lp_norm(v, E("inf")) == 4.0);
    CHECK(lp_norm(Vector{}, E("2")) == 0.0);
    CHECK(lp_norm(Vector{1e300, 1e300}, E("2")) == doctest::Approx(std::sqrt(2.0) * 1e300));
}

TEST_CASE("diagonal_norm_exact examples") {
    CHECK(diagonal_norm_exact(diag(2, {1, 0.5}, "2", "1")).value == 1.0);
    const NormCertificate c = diagonal_norm_exact(diag(1, {3, 4}, "2", "1"));
    CHECK(c.value == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(c.kind == CertKind::exact);
    CHECK(diagonal_norm_exact(diag(3, {0, 0, 0}, "3/2", "2")).value == 0.0);
}

TEST_CASE("brute-force l2 circle oracle confirms ||(3,4)||_2") {
    CHECK(grid_oracle_2d(diag(1, {3, 4}, "2", "1"), 200000) == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("diagonal_norm_exact against a grid oracle at N = 2") {
    const char* exps[] = {"1", "3/2", "2", "3", "inf"};
    for (const char* p : exps) {
        for (const char* q : exps) {
            for (int n = 1; n <= 3; ++n) {
                const DiagonalOperator op = diag(n, {0.7, -1.3}, p, q);
                const double exact = diagonal_norm_exact(op).value;
                CHECK(grid_oracle_2d(op, 20000) == doctest::Approx(exact).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("diagonal witness reproduces the exact value") {
    const DiagonalOperator op = diag(2, {1, -2, 0.5, 3}, "6", "1");
    const NormCertificate c = diagonal_norm_exact(op);
    REQUIRE(c.witness.size() == 2);
    const Vector y = evaluate_diagonal(op, c.witness);
    CHECK(lp_norm(y, op.q) == doctest::Approx(c.value).epsilon(1e-12));
    for (const auto& x : c.witness) CHECK(lp_norm(x, op.p) <= 1.0 + 1e-12);
}

TEST_CASE("vertex enumeration examples") {
    CHECK(vertex_bruteforce_norm(DenseForm(3, 2, Field::real)).value == 0.0);
    const NormCertificate l2 = vertex_bruteforce_norm(bh_form(hadamard(2), 3));
    CHECK(l2.value == 4.0);
    CHECK(l2.kind == CertKind::exact);
    CHECK(std::abs(evaluate_form(bh_form(hadamard(2), 3), l2.witness)) == 4.0);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        CHECK(vertex_bruteforce_norm(phi_form(dim, 3).as_form()).value == static_cast<double>(dim));
    }
}

TEST_CASE("vertex enumeration guards") {
    CHECK_THROWS_AS(vertex_bruteforce_norm(bh_form(fourier(2), 3)), std::invalid_argument);
    CHECK_THROWS_AS(vertex_bruteforce_norm(bh_form(hadamard(8), 4)), std::invalid_argument);
    CHECK_NOTHROW(vertex_bruteforce_norm(bh_form(hadamard(8), 3)));
}

TEST_CASE("vertex enumeration of operators matches the exact formula for p = inf") {
    for (const char* q : {"1", "3/2", "2", "3", "inf"}) {
        const DiagonalOperator op = diag(2, {1, -0.5, 2}, "inf", q);
        const NormCertificate v = vertex_bruteforce_norm(op.as_operator_form(), op.q);
        CHECK(v.value == doctest::Approx(diagonal_norm_exact(op).value).epsilon(1e-14));
    }
}

TEST_CASE("alternating ascent examples") {
    const DiagonalOperator op = diag(1, {3, 4}, "2", "1");
    const std::vector<Exponent> slots{op.p};
    const NormCertificate c = alternating_ascent_norm(op.as_operator_form(), slots, op.q);
    CHECK(c.value >= 5.0 - 1e-8);
    CHECK(c.value <= 5.0 + 1e-12);
    CHECK(c.kind == CertKind::lower);

    const std::vector<Exponent> inf3(3, Exponent::infinity());
    CHECK(alternating_ascent_norm(bh_form(hadamard(2), 3), inf3).value == doctest::Approx(4.0));
    CHECK(alternating_ascent_norm(DenseForm(3, 2, Field::real), inf3).value == 0.0);
    CHECK_THROWS_AS(alternating_ascent_norm(DenseForm(3, 2, Field::real), slots), std::invalid_argument);
}

TEST_CASE("ascent witness re-evaluates to its value") {
    std::mt19937_64 rng(4);
    std::vector<Scalar> c;
    for (int i = 0; i < 9; ++i) {
        for (const auto& z : random_vector(3, Field::complex, rng)) c.push_back(z);
    }
    const DenseForm t(3, 3, Field::complex, c);
    const std::vector<Exponent> slots{E("3/2"), E("2"), E("inf")};
    const NormCertificate cert = alternating_ascent_norm(t, slots);
    CHECK(std::abs(evaluate_form(t, cert.witness)) == doctest::Approx(cert.value).epsilon(1e-9));
    for (std::size_t i = 0; i < 3; ++i) CHECK(lp_norm(cert.witness[i], slots[i]) <= 1.0 + 1e-12);
    CHECK(cert.seed == AscentOptions{}.seed);
}

TEST_CASE("ascent is deterministic for a fixed seed") {
    const std::vector<Exponent> inf3(3, Exponent::infinity());
    const DenseForm t = bh_form(fourier(3), 3);
    CHECK(alternating_ascent_norm(t, inf3) == alternating_ascent_norm(t, inf3));
}

TEST_CASE("holder_maximizer") {
    const Vector g{1, -3, 3};
    CHECK(holder_maximizer(g, E("1"), Field::real) == Vector{0, -1, 0});
    CHECK(holder_maximizer(g, E("inf"), Field::real) == Vector{1, -1, 1});
    const Vector x = holder_maximizer(g, E("2"), Field::real);
    Scalar pairing = 0;
    for (std::size_t i = 0; i < 3; ++i) pairing += g[i] * x[i];
    CHECK(pairing.real() == doctest::Approx(std::sqrt(19.0)));
    CHECK(lp_norm(x, E("2")) == doctest::Approx(1.0));
    const Vector z = holder_maximizer(Vector{0, 0}, E("3"), Field::real);
    CHECK(lp_norm(z, E("3")) == doctest::Approx(1.0));
}

TEST_CASE("weak_s_norm examples") {
    std::vector<Vector> canon;
    for (std::size_t k = 0; k < 4; ++k) {
        Vector e(4, 0.0);
        e[k] = 1;
        canon.push_back(e);
    }
    CHECK(weak_s_norm(canon, E("2"), E("2")).value == 1.0);
    CHECK(weak_s_norm(canon, E("1"), E("2")).value == doctest::Approx(2.0));
    CHECK(weak_s_norm(canon, E("3"), E("3/2")).value == 1.0);
    CHECK(weak_s_norm(canon, E("1"), E("2")).kind == CertKind::exact);

    const std::vector<Vector> single{{3, 4}};
    for (const char* s : {"1", "2", "inf"}) {
        CHECK(weak_s_norm(single, E(s), E("2")).value == doctest::Approx(5.0));
        CHECK(weak_s_norm(single, E(s), E("1")).value == doctest::Approx(7.0));
    }
    CHECK(weak_s_norm(std::vector<Vector>{}, E("2"), E("2")).value == 0.0);
}

TEST_CASE("weak_s_norm lower certificate stays under its upper bound") {
    const std::vector<Vector> xs{{1, 2, 0}, {0, 1, -1}, {2, 0, 1}};
    const NormCertificate c = weak_s_norm(xs, E("2"), E("3/2"));
    CHECK(c.kind == CertKind::lower);
    REQUIRE(c.upper_bound.has_value());
    CHECK(c.value <= *c.upper_bound + 1e-9);
    CHECK(c.value > 0);
}

TEST_CASE("partial_lu_norm examples") {
    CHECK(partial_lu_norm(Vector{1, 1, 1}, E("1"), 3) == doctest::Approx(3.0));
    CHECK(partial_lu_norm(Vector{3, 4}, E("2"), 2) == doctest::Approx(5.0));
    Vector h;
    for (int k = 1; k <= 10; ++k) h.emplace_back(1.0 / k);
    CHECK(partial_lu_norm(h, E("1"), 10) == doctest::Approx(7381.0 / 2520.0).epsilon(1e-14));
    CHECK(partial_lu_norm(h, E("inf"), 10) == 1.0);
    CHECK_THROWS_AS(partial_lu_norm(h, E("1"), 11), std::invalid_argument);
}

TEST_CASE("partial_lu_norm monotone in M and antitone in u") {
    Vector a;
    for (int k = 1; k <= 40; ++k) a.emplace_back(std::pow(k, -0.7));
    const std::vector<Exponent> us{E("1"), E("3/2"), E("2"), E("3"), E("inf")};
    for (std::size_t m = 1; m < a.size(); ++m) {
        for (const auto& u : us) CHECK(partial_lu_norm(a, u, m) <= partial_lu_norm(a, u, m + 1));
        for (std::size_t i = 0; i + 1 < us.size(); ++i) {
            CHECK(partial_lu_norm(a, us[i + 1], m) <= partial_lu_norm(a, us[i], m) + 1e-15);
        }
    }
}

TEST_CASE("homogeneity of certified values") {
    const DiagonalOperator op = diag(2, {1, -2, 0.5}, "3", "2");
    DiagonalOperator scaled = op;
    for (auto& z : scaled.alpha) z *= -2.5;
    CHECK(diagonal_norm_exact(scaled).value == doctest::Approx(2.5 * diagonal_norm_exact(op).value).epsilon(1e-14));
    const std::vector<Exponent> slots(2, op.p);
    const double a = alternating_ascent_norm(op.as_operator_form(), slots, op.q).value;
    const double b = alternating_ascent_norm(scaled.as_operator_form(), slots, op.q).value;
    CHECK(b == doctest::Approx(2.5 * a).epsilon(1e-12));
}

TEST_CASE("sandwich: lower certificates never exceed exact values") {
    std::mt19937_64 rng(21);
    const char* exps[] = {"1", "3/2", "2", "3", "inf"};
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        DiagonalOperator op = diag(n, random_vector(3, Field::real, rng), exps[pick(rng)], exps[pick(rng)]);
        const double exact = diagonal_norm_exact(op).value;
        const std::vector<Exponent> slots(static_cast<std::size_t>(n), op.p);
        const double lower = alternating_ascent_norm(op.as_operator_form(), slots, op.q).value;
        CHECK(lower <= exact * (1 + 1e-9));
        CHECK(lower >= exact * (1 - 1e-6));
    }
}

TEST_CASE("certificate JSON round trip") {
    const std::vector<Exponent> inf3(3, Exponent::infinity());
    const NormCertificate c = alternating_ascent_norm(bh_form(fourier(2), 3), inf3);
    const NormCertificate back = certificate_from_json(to_json(c));
    CHECK(back == c);
    const auto j = to_json(c);
    for (const char* key : {"value", "kind", "method", "witness", "seed", "iterations"}) CHECK(j.contains(key));
    CHECK(parse_cert_kind("upper") == CertKind::upper);
    CHECK_THROWS_AS(parse_cert_kind("bogus"), std::invalid_argument);
}
