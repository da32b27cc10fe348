#pragma once

// Test-only oracles and generators. Nothing here calls into the algorithm
// under test beyond the Poly/Rational value types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "multifold/poly.hpp"
#include "multifold/rational.hpp"

namespace oracle {

using multifold::Poly;
using multifold::Rational;

/// Σ a_k x^k with explicit powers.
inline Rational power_sum(const Poly& p, const Rational& x) {
    Rational total(0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) total += p.coeffs()[k] * multifold::pow(x, static_cast<unsigned>(k));
    return total;
}

/// Determinant by Gaussian elimination over the rationals with partial
/// pivoting on nonzero entries.
inline Rational gauss_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Sylvester determinant with rational entries, no integer scaling.
inline Rational sylvester_resultant(const Poly& f, const Poly& g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f.coeffs()[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g.coeffs()[n - j];
    return gauss_determinant(std::move(s));
}

/// Plain bisection in long double on a bracketing interval.
inline long double bisect(const Poly& p, long double lo, long double hi) {
    auto f = [&](long double x) {
        long double acc = 0;
        for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + static_cast<long double>(p.coeffs()[k].get_d());
        return acc;
    };
    long double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        long double mid = (lo + hi) / 2;
        long double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

/// All complex roots by Weierstrass/Durand–Kerner simultaneous iteration in
/// long double, starting from the usual (0.4 + 0.9i)^k spiral.
inline std::vector<std::complex<long double>> durand_kerner(const Poly& p, int iterations = 2000) {
    using C = std::complex<long double>;
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<C> monic(n + 1);
    const long double lead = static_cast<long double>(p.leading().get_d());
    for (std::size_t k = 0; k <= n; ++k) monic[k] = static_cast<long double>(p.coeffs()[k].get_d()) / lead;
    auto eval = [&](C z) {
        C acc = 0;
        for (std::size_t k = n + 1; k-- > 0;) acc = acc * z + monic[k];
        return acc;
    };
    std::vector<C> z(n);
    C seed(0.4L, 0.9L);
    C cur = 1;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = cur;
        cur *= seed;
    }
    for (int it = 0; it < iterations; ++it) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            C denom = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            C step = eval(z[i]) / denom;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-30L) break;
    }
    // Newton polish on the original polynomial
    for (auto& r : z) {
        for (int it = 0; it < 5; ++it) {
            C f = 0, df = 0;
            for (std::size_t k = n + 1; k-- > 0;) {
                df = df * r + f;
                f = f * r + monic[k];
            }
            if (std::abs(df) == 0) break;
            r -= f / df;
        }
    }
    return z;
}

/// Distinct real roots in (lo, hi] by a Sturm sequence built on raw
/// coefficient vectors (constant term first), with zeros skipped in the
/// sign counts.
inline int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
    using Vec = std::vector<Rational>;
    auto trim = [](Vec& v) {
        while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    };
    auto rem = [&](Vec a, const Vec& b) {
        while (a.size() >= b.size()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
            a.pop_back();
            trim(a);
        }
        return a;
    };
    std::vector<Vec> seq;
    seq.push_back(p.coeffs());
    Vec d;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) d.push_back(p.coeffs()[k] * static_cast<long>(k));
    trim(d);
    while (!d.empty()) {
        seq.push_back(d);
        Vec r = rem(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        d = r;
    }
    auto variations = [&](const Rational& x) {
        int count = 0, last = 0;
        for (const auto& v : seq) {
            const int s = sgn(power_sum(Poly(v), x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(long max_num, long max_den) {
        Rational r(integer(-max_num, max_num), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long max_num, long max_den) {
        Rational r;
        do r = rational(max_num, max_den);
        while (sgn(r) == 0);
        return r;
    }

    /// Degree exactly `degree`, coefficients p/q.
    Poly poly(int degree, long max_num = 10, long max_den = 10) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& v : c) v = rational(max_num, max_den);
        c.back() = nonzero_rational(max_num, max_den);
        return Poly(std::move(c));
    }

    Poly poly_up_to(int max_degree, long max_num = 10, long max_den = 10) {
        return poly(static_cast<int>(integer(1, max_degree)), max_num, max_den);
    }

    /// Random rational in [lo, hi] on a grid of the given resolution.
    Rational in_range(const Rational& lo, const Rational& hi, long resolution = 1000) {
        Rational t(integer(0, resolution), resolution);
        t.canonicalize();
        return Rational(lo + (hi - lo) * t);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
