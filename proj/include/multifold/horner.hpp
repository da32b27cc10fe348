#pragma once

#include <vector>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"

namespace multifold {

/// Partial results of nested evaluation
///   p(x) = x(x(…(x·a_n + a_{n-1})…) + a_1) + a_0.
///
/// `partials` runs b_n, b_{n-1}, …, b_0 where b_n = a_n and
/// b_k = x·b_{k+1} + a_k, so the last entry is p itself.
struct HornerChain {
    std::vector<Poly> partials;

    const Poly& innermost() const { return partials.front(); }
    const Poly& outermost() const { return partials.back(); }

    friend bool operator==(const HornerChain&, const HornerChain&) = default;
};

inline HornerChain horner_chain(const Poly& p) {
    if (p.is_zero()) throw DomainError("Horner chain of the zero polynomial");
    HornerChain chain;
    const auto n = static_cast<std::size_t>(p.degree());
    chain.partials.reserve(n + 1);
    Poly partial = Poly::constant(p.coeffs()[n]);
    chain.partials.push_back(partial);
    for (std::size_t k = n; k-- > 0;) {
        partial = partial.times_x() + Poly::constant(p.coeffs()[k]);
        chain.partials.push_back(partial);
    }
    return chain;
}

/// Exact p(x), one multiply-and-add per coefficient.
inline Rational eval_horner(const Poly& p, const Rational& x) {
    Rational d(0);
    const auto& a = p.coeffs();
    for (std::size_t k = a.size(); k-- > 0;) {
        d *= x;
        d += a[k];
    }
    return d;
}

}  // namespace multifold
