#include "diaglab/exponent.hpp"

#include <cctype>
#include <limits>

namespace diaglab {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty() || digits.size() > 18) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    std::int64_t v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = trim(text);
    std::string_view s = whole;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational r;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto den = parse_digits(s.substr(slash + 1), whole);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
        r = Rational(parse_digits(s.substr(0, slash), whole), den);
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto int_part = s.substr(0, dot);
        const auto frac_part = s.substr(dot + 1);
        if (int_part.size() + frac_part.size() > 18 || (int_part.empty() && frac_part.empty())) {
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        const std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
        const std::int64_t fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
        r = Rational(ip * scale + fp, scale);
    } else {
        r = Rational(parse_digits(s, whole));
    }
    return negative ? -r : r;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

Exponent::Exponent(Rational value) : value_(value) {
    if (value < 1) {
        throw std::invalid_argument("exponent must lie in [1, inf], got " + diaglab::to_string(value));
    }
}

Exponent Exponent::from_reciprocal(const Rational& recip) {
    if (recip < 0 || recip > 1) {
        throw std::invalid_argument("reciprocal exponent out of [0, 1]: " + diaglab::to_string(recip));
    }
    if (recip == Rational(0)) return infinity();
    return Exponent(1 / recip);
}

Exponent Exponent::parse(std::string_view text) {
    const auto s = trim(text);
    if (s == "inf" || s == "infinity" || s == "∞") return infinity();
    return Exponent(parse_rational(s));
}

const Rational& Exponent::value() const {
    if (!value_) throw std::logic_error("infinite exponent has no finite value");
    return *value_;
}

Rational Exponent::reciprocal() const { return value_ ? 1 / *value_ : Rational(0); }

double Exponent::to_double() const {
    return value_ ? diaglab::to_double(*value_) : std::numeric_limits<double>::infinity();
}

std::string Exponent::to_string() const { return value_ ? diaglab::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    if (a.value() < b.value()) return std::strong_ordering::less;
    if (b.value() < a.value()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Exponent conjugate(const Exponent& p) { return Exponent::from_reciprocal(1 - p.reciprocal()); }

HolderResult holder_r(const Exponent& p, const Exponent& q, int n) {
    if (n < 1) throw std::invalid_argument("arity must be positive");
    // p <= n*q  <=>  n/p >= 1/q, which also covers the infinite cases.
    const Rational n_over_p = Rational(n) * p.reciprocal();
    const Rational inv_q = q.reciprocal();
    if (n_over_p >= inv_q) return {};
    return {Exponent::from_reciprocal(inv_q - n_over_p)};
}

Exponent nuclear_t(const Exponent& p, const Exponent& q, int n) {
    if (n < 1) throw std::invalid_argument("arity must be positive");
    const Rational s = Rational(n) * conjugate(p).reciprocal() + q.reciprocal();
    if (s >= 1) return Exponent::one();
    return Exponent::from_reciprocal(s);
}

Exponent half_conjugate(const Exponent& p) {
    const Rational recip = 2 * conjugate(p).reciprocal();
    if (recip > 1) throw std::invalid_argument("p'/2 < 1 for p = " + p.to_string());
    return Exponent::from_reciprocal(recip);
}

}  // namespace diaglab
