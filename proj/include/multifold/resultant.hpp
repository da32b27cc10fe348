#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"

namespace multifold {

namespace detail {

inline Integer denominator_lcm(const Poly& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. Every division is exact. Destroys `m`.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Integer(1);
    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return Integer(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace detail

/// Res(f, g) = lc(f)^{deg g} · ∏_{f(α)=0} g(α), evaluated as the Sylvester
/// determinant. Both arguments are cleared to integer polynomials first so
/// the elimination stays fraction free.
inline Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const Integer lf = detail::denominator_lcm(f);
    const Integer lg = detail::denominator_lcm(g);

    auto integral = [](const Poly& p, const Integer& scale) {
        std::vector<Integer> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (scale / c.get_den()));
        return out;
    };
    const std::vector<Integer> fi = integral(f, lf);
    const std::vector<Integer> gi = integral(g, lg);

    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> sylvester(size, std::vector<Integer>(size, Integer(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t j = 0; j <= m; ++j) sylvester[row][row + j] = fi[m - j];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= n; ++j) sylvester[n + row][row + j] = gi[n - j];

    Integer det = detail::bareiss_determinant(sylvester);

    Integer scale_f, scale_g;
    mpz_pow_ui(scale_f.get_mpz_t(), lf.get_mpz_t(), n);
    mpz_pow_ui(scale_g.get_mpz_t(), lg.get_mpz_t(), m);
    Rational result(det, scale_f * scale_g);
    result.canonicalize();
    return result;
}

}  // namespace multifold
