#pragma once

#include <cstddef>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"
#include "multifold/resultant.hpp"

namespace multifold {

/// Rational polynomials whose roots include the real parts (q_re) and the
/// imaginary parts (q_im) of every complex root of `source`.
struct RealImagReduction {
    Poly source;
    Poly q_re;
    Poly q_im;
};

/// Exact interpolation through (xs[i], ys[i]) with distinct xs.
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw InternalError("interpolate: size mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences, in place
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational span = xs[i] - xs[i - level];
            if (sgn(span) == 0) throw InternalError("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    Poly result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * Poly(std::vector<Rational>{Rational(-xs[i]), Rational(1)}) + Poly::constant(dd[i]);
    }
    return result;
}

namespace detail {

/// x ↦ Res_y(p(y), p(direction·y + x)), recovered from deg² + 1 scalar
/// resultants at x = 0, 1, 2, ….
inline Poly root_combination_poly(const Poly& p, long direction) {
    if (p.degree() < 1) throw DomainError("root combination needs a polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(p.degree());
    const std::size_t nodes = n * n + 1;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    xs.reserve(nodes);
    ys.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        Rational t(static_cast<long>(i));
        xs.push_back(t);
        ys.push_back(resultant(p, compose_linear(p, t, Rational(direction))));
    }
    return primitive_part(interpolate(xs, ys));
}

}  // namespace detail

/// S(x) = Res_y(p(y), p(x - y)); its roots are z_i + z_j over all ordered
/// pairs of roots of p. Returned primitive.
inline Poly sum_roots_poly(const Poly& p) { return detail::root_combination_poly(p, -1); }

/// D(x) = Res_y(p(y), p(y + x)); its roots are z_j - z_i over all ordered
/// pairs, so x^deg(p) divides it. Returned primitive.
inline Poly diff_roots_poly(const Poly& p) { return detail::root_combination_poly(p, 1); }

/// q_re(x) = S(2x) for the squarefree part of p. Re z is a root for every
/// root z of p, because z + conj(z) = 2 Re z.
inline Poly real_part_poly(const Poly& p) {
    if (p.degree() < 1) throw DomainError("real-part polynomial needs degree >= 1");
    return primitive_part(scale_variable(sum_roots_poly(squarefree_part(p)), Rational(2)));
}

/// q_im(x) = x · g(-4x²) where D(x) / x^m = g(x²) for the squarefree part
/// of p. A non-real root z gives the nonzero difference z - conj(z) = 2i·Im z,
/// so -4(Im z)² is a root of g. The leading x covers real roots.
inline Poly imag_part_poly(const Poly& p) {
    if (p.degree() < 1) throw DomainError("imaginary-part polynomial needs degree >= 1");
    const Poly d = diff_roots_poly(squarefree_part(p));
    const Poly r = strip_x_factors(d).first;
    std::vector<Rational> g;
    for (std::size_t k = 0; k < r.coeffs().size(); ++k) {
        if (k % 2 == 1) {
            if (sgn(r.coeffs()[k]) != 0) throw InternalError("difference polynomial is not even");
        } else {
            g.push_back(r.coeffs()[k]);
        }
    }
    std::vector<Rational> q(2 * g.size());
    Rational factor(1);
    for (std::size_t j = 0; j < g.size(); ++j) {
        q[2 * j + 1] = g[j] * factor;
        factor *= -4;
    }
    return primitive_part(Poly(std::move(q)));
}

inline RealImagReduction reduce(const Poly& p) {
    if (p.degree() < 1) throw DomainError("reduction needs a polynomial of degree >= 1");
    return RealImagReduction{p, real_part_poly(p), imag_part_poly(p)};
}

}  // namespace multifold
