#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"
#include "multifold/rational.hpp"

namespace multifold {

// Polynomial text grammar (in x):
//
//   poly  := term (('+' | '-') term)*      first term may carry a sign
//   term  := coeff | coeff? 'x' ('^' digits)?
//   coeff := digits ('/' digits)?
//
// Whitespace is allowed between tokens. Like-degree terms are summed.

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        std::vector<Rational> coeffs;
        bool first = true;
        while (true) {
            skip_ws();
            bool negative = false;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [coeff, exponent] = term();
            if (negative) coeff = -coeff;
            if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
            coeffs[exponent] += coeff;
            skip_ws();
            if (at_end()) break;
        }
        return Poly(std::move(coeffs));
    }

private:
    static constexpr std::size_t max_exponent = 100000;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool digit_here() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }

    Integer digits() {
        std::size_t start = pos_;
        while (digit_here()) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", start);
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::pair<Rational, std::size_t> term() {
        Rational coeff(1);
        bool has_coeff = false;
        if (digit_here()) {
            has_coeff = true;
            Integer num = digits();
            Integer den(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t den_pos = pos_;
                den = digits();
                if (den == 0) throw ParseError("zero denominator", den_pos);
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            skip_ws();
        }
        if (!at_end() && peek() == 'x') {
            ++pos_;
            skip_ws();
            std::size_t exponent = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t exp_pos = pos_;
                Integer e = digits();
                if (e > static_cast<unsigned long>(max_exponent)) throw ParseError("exponent too large", exp_pos);
                exponent = e.get_ui();
            }
            return {coeff, exponent};
        }
        if (!has_coeff) throw ParseError("expected a coefficient or 'x'", pos_);
        return {coeff, 0};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly poly_parse(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Canonical text form, highest degree first, e.g. "16x^5 - 20x^3 + 5x - 1/2".
/// Accepted back by poly_parse.
inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rational& c = p.coeffs()[k];
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        Rational magnitude = abs(c);
        if (k == 0 || magnitude != 1) out += to_string(magnitude);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace multifold
