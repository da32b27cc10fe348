#pragma once

#include <utility>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"

namespace multifold {

/// A sheet coordinate that moves with the rolling parameter x: an exact
/// polynomial in x, in sheet units.
class ParamScalar {
public:
    ParamScalar() = default;
    explicit ParamScalar(Poly p) : poly_(std::move(p)) {}

    static ParamScalar constant(const Rational& c) { return ParamScalar(Poly::constant(c)); }
    /// The rolling parameter itself (left edge of sheet x).
    static ParamScalar parameter() { return ParamScalar(Poly::identity()); }

    const Poly& poly() const noexcept { return poly_; }
    bool is_constant() const noexcept { return poly_.degree() <= 0; }

    Rational at(const Rational& x) const { return poly_(x); }

    ParamScalar times_parameter() const { return ParamScalar(poly_.times_x()); }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) { return ParamScalar(a.poly_ + b.poly_); }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return ParamScalar(a.poly_ - b.poly_); }
    friend ParamScalar operator+(const ParamScalar& a, const Rational& c) { return ParamScalar(a.poly_ + Poly::constant(c)); }

    friend bool operator==(const ParamScalar&, const ParamScalar&) = default;

private:
    Poly poly_;
};

/// Two long horizontal strips whose inner edges encode a signed quantity d.
/// `loc_zero` is the inner edge of the strip that traces back to Z; the
/// signed gap is other - loc_zero.
struct StripPair {
    ParamScalar loc_zero;
    ParamScalar other;

    ParamScalar gap() const { return other - loc_zero; }

    /// True when, at x, the lower strip is the one locating zero.
    bool zero_strip_is_lower(const Rational& x) const { return loc_zero.at(x) <= other.at(x); }

    friend bool operator==(const StripPair&, const StripPair&) = default;
};

/// Sandwich sheet a_n between two horizontal strips, zero-locating edge on
/// the center line v = 0. For a_n > 0 the lower strip locates zero, for
/// a_n < 0 the upper one.
inline StripPair seed_pair(const Rational& leading) {
    if (sgn(leading) == 0) throw DomainError("seed pair needs a nonzero leading coefficient");
    return StripPair{ParamScalar::constant(Rational(0)), ParamScalar::constant(leading)};
}

/// Everything one multiply-and-add iteration lays down, with coordinates as
/// polynomials in x. Lines are v = slope·u + intercept.
struct IterationGeometry {
    // diagonal of the rectangle bounded by the inner edges and the zero/one
    // creases, through Z = (0, loc_zero)
    ParamScalar rect_diagonal_slope;
    ParamScalar rect_diagonal_intercept;
    // horizontal edge through the diagonal's crossing with sheet x's left edge
    ParamScalar auxiliary_edge;
    // edge flush with the far side of sheet a; meets the zero crease at Y
    ParamScalar y_edge;
    bool sheet_a_placed = false;
    Rational sheet_a_length;
    // 45° strips through Z and Y
    ParamScalar transfer_z_intercept;
    ParamScalar transfer_y_intercept;
    Rational vertical_strip_u;
    StripPair output;
};

/// One pass of the construction: turns a pair encoding d into a pair encoding
/// x·d + a, with the transfer carried out at the vertical strip u = offset.
inline IterationGeometry iteration_step(const StripPair& pair, const Rational& a, const Rational& offset) {
    IterationGeometry g;
    const ParamScalar d = pair.gap();
    g.rect_diagonal_slope = d;
    g.rect_diagonal_intercept = pair.loc_zero;
    // the diagonal crosses u = x at v = loc_zero + x·d
    g.auxiliary_edge = pair.loc_zero + d.times_parameter();
    g.sheet_a_placed = sgn(a) != 0;
    g.sheet_a_length = a;
    g.y_edge = g.auxiliary_edge + a;
    g.transfer_z_intercept = pair.loc_zero;
    g.transfer_y_intercept = g.y_edge;
    g.vertical_strip_u = offset;
    // slope-1 lines through (0, v) reach (offset, v + offset)
    g.output = StripPair{g.transfer_z_intercept + offset, g.transfer_y_intercept + offset};
    return g;
}

/// Gap-only form: the new pair for (pair, a) at the given placement.
inline StripPair iterate_pair(const StripPair& pair, const Rational& a, const Rational& offset) {
    return iteration_step(pair, a, offset).output;
}

}  // namespace multifold
