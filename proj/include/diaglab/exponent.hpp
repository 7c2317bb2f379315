#pragma once

/**
 * @file exponent.hpp
 * @brief Exact summability exponents in [1, inf].
 *
 * Every exponent is a reduced rational or the sentinel infinity. Comparisons
 * that decide which classification cell applies (p == n*q, q == p') are done
 * in exact arithmetic; doubles only appear when a norm is evaluated.
 *
 * Text grammar (parse and to_string agree):
 *   "inf"   infinity
 *   "a/b"   rational
 *   "1.25"  decimal literal, read as the exact fraction 125/100
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace diaglab {

using Rational = boost::rational<std::int64_t>;

/// Parses "a/b", integers and plain decimals (optionally signed) into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

class Exponent {
public:
    /// Throws std::invalid_argument unless value >= 1.
    explicit Exponent(Rational value);
    explicit Exponent(std::int64_t value) : Exponent(Rational(value)) {}

    static Exponent infinity() { return Exponent(); }
    static Exponent one() { return Exponent(Rational(1)); }

    /// Exponent with the given reciprocal; 0 maps to infinity. Requires 0 <= recip <= 1.
    static Exponent from_reciprocal(const Rational& recip);

    static Exponent parse(std::string_view text);

    bool is_infinite() const { return !value_.has_value(); }
    /// Finite value; throws std::logic_error for infinity.
    const Rational& value() const;
    /// 1/p exactly, with 1/inf = 0.
    Rational reciprocal() const;
    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    Exponent() = default;
    std::optional<Rational> value_;
};

/// p' with 1/p + 1/p' = 1.
Exponent conjugate(const Exponent& p);

/// Case split for the space of bounded diagonal n-linear maps l_p -> l_q.
struct HolderResult {
    /// Empty means the bounded (l_inf) case.
    std::optional<Exponent> r;

    bool bounded() const { return !r.has_value(); }
    friend bool operator==(const HolderResult&, const HolderResult&) = default;
};

/// l_inf when p <= n*q (n*inf = inf), otherwise l_r with 1/r = 1/q - n/p.
HolderResult holder_r(const Exponent& p, const Exponent& q, int n);

/// t = max{(n/p' + 1/q)^{-1}, 1}; infinity when n/p' + 1/q = 0.
Exponent nuclear_t(const Exponent& p, const Exponent& q, int n);

/// l_u norm exponent used for the extendible bound on l_p forms: u = p'/2.
Exponent half_conjugate(const Exponent& p);

}  // namespace diaglab
