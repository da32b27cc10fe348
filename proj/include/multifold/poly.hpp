#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/rational.hpp"

namespace multifold {

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored constant term first: `coeffs()[k]` is the
/// coefficient of x^k. The list is always trimmed, so the zero polynomial has
/// no coefficients and every other polynomial has a nonzero leading one.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    /// c·x^k
    static Poly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    static Poly identity() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    const Rational& leading() const {
        if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// x·p
    Poly times_x() const {
        if (is_zero()) return {};
        std::vector<Rational> v;
        v.reserve(coeffs_.size() + 1);
        v.emplace_back(0);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Poly derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> v(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) v[k - 1] = p.coeffs()[k] * static_cast<long>(k);
    return Poly(std::move(v));
}

/// Euclidean division: a = q·b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db);
    const Rational& lead = b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (sgn(rem[i]) == 0) continue;
        Rational factor = rem[i] / lead;
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coeffs()[j];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly remainder(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Exact quotient; throws if b does not divide a.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("polynomial division was not exact");
    return q;
}

inline Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Scales p to integer coefficients with gcd 1 and a positive leading
/// coefficient.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd(0);
    for (const auto& c : p.coeffs()) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(p.leading()) < 0) factor = -factor;
    return p * factor;
}

/// p / gcd(p, p'), made primitive: same roots, all simple.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return Poly{1};
    return primitive_part(exact_quotient(p, gcd(p, derivative(p))));
}

/// Yun's algorithm: p = c · f_1 · f_2² · … · f_m^m with each f_i squarefree,
/// monic and pairwise coprime. Entry i-1 holds f_i (possibly the constant 1).
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.degree() < 1) throw DomainError("squarefree decomposition needs degree >= 1");
    std::vector<Poly> factors;
    Poly a = monic(p);
    Poly d = derivative(a);
    Poly g = gcd(a, d);
    Poly b = exact_quotient(a, g);
    Poly c = exact_quotient(d, g);
    Poly e = c - derivative(b);
    while (b.degree() > 0) {
        Poly f = gcd(b, e);
        factors.push_back(f);
        b = exact_quotient(b, f);
        c = exact_quotient(e, f);
        e = c - derivative(b);
    }
    return factors;
}

/// q(x) = p(-x)
inline Poly negate_variable(const Poly& p) {
    std::vector<Rational> v = p.coeffs();
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Poly(std::move(v));
}

/// q(y) = p(alpha + beta·y)
inline Poly compose_linear(const Poly& p, const Rational& alpha, const Rational& beta) {
    Poly lin(std::vector<Rational>{alpha, beta});
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

/// q(x) = p(c·x)
inline Poly scale_variable(const Poly& p, const Rational& c) {
    std::vector<Rational> v = p.coeffs();
    Rational power(1);
    for (auto& coeff : v) {
        coeff *= power;
        power *= c;
    }
    return Poly(std::move(v));
}

/// Divides out the largest power of x dividing p. Returns the stripped
/// polynomial and the removed exponent.
inline std::pair<Poly, std::size_t> strip_x_factors(const Poly& p) {
    if (p.is_zero()) return {p, 0};
    std::size_t m = 0;
    while (sgn(p.coeffs()[m]) == 0) ++m;
    return {Poly(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m), p.coeffs().end())), m};
}

/// Σ |a_k| · r^k, an upper bound for |p(x)| on |x| ≤ r.
inline Rational majorant(const Poly& p, const Rational& r) {
    Rational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= r;
        acc += abs(*it);
    }
    return acc;
}

/// Cauchy bound 1 + max_{k<n} |a_k / a_n|; every complex root satisfies |z| < B.
inline Rational cauchy_root_bound(const Poly& p) {
    if (p.degree() < 1) throw DomainError("root bound needs a polynomial of degree >= 1");
    Rational best(0);
    const Rational lead = abs(p.leading());
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
        Rational ratio = abs(p.coeffs()[k]) / lead;
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

}  // namespace multifold
