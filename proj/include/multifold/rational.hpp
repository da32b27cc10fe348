#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "multifold/errors.hpp"

namespace multifold {

/// Exact rational number, always kept in canonical form (gcd(num, den) = 1,
/// den > 0, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& r) { return Rational(::abs(r)); }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b(base);
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rational from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value");
    return Rational(value);
}

/// "p" or "p/q", the canonical exchange format.
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline Integer parse_digits(std::string_view text, std::size_t& pos, std::size_t base_offset) {
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected digits", base_offset + start);
    return Integer(std::string(text.substr(start, pos - start)), 10);
}

}  // namespace detail

/// Parses "[-+]p" or "[-+]p/q" with decimal integers.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num = detail::parse_digits(text, pos, 0);
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_pos = pos;
        den = detail::parse_digits(text, pos, 0);
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    if (pos != text.size()) throw ParseError("unexpected character", pos);
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

/// Parses a decimal literal ("0.001", "1e-12", "2.5E3") or a rational
/// ("1/1000") exactly.
inline Rational parse_decimal(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse_rational(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long exponent = 0;
    std::size_t start = pos;
    while (pos < text.size() && detail::is_digit(text[pos])) digits += text[pos++];
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && detail::is_digit(text[pos])) {
            digits += text[pos++];
            --exponent;
        }
    }
    if (digits.empty()) throw ParseError("expected a decimal number", start);
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        Integer e = detail::parse_digits(text, pos, 0);
        if (!e.fits_slong_p() || ::abs(e) > 100000) throw ParseError("exponent out of range", pos);
        exponent += exp_negative ? -e.get_si() : e.get_si();
    }
    if (pos != text.size()) throw ParseError("unexpected character", pos);

    Rational value{Integer(digits, 10)};
    Integer ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        value /= Rational(ten_power);
    } else {
        value *= Rational(ten_power);
    }
    return negative ? Rational(-value) : value;
}

/// Decimal rendering rounded half away from zero to `digits` places after
/// the point.
inline std::string to_decimal(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(r) * Rational(scale);
    // floor(scaled + 1/2)
    Rational shifted = scaled + Rational(1, 2);
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    bool negative = sgn(r) < 0 && rounded != 0;
    return negative ? "-" + body : body;
}

/// Number of decimal digits needed to show a value to within `tolerance`:
/// ceil(-log10(tolerance)), at least 1.
inline int digits_for_tolerance(const Rational& tolerance) {
    if (sgn(tolerance) <= 0) return 1;
    int digits = 0;
    Rational t(tolerance);
    while (t < 1 && digits < 10000) {
        t *= 10;
        ++digits;
    }
    return digits < 1 ? 1 : digits;
}

}  // namespace multifold
