#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/fold_compiler.hpp"
#include "multifold/fold_simulator.hpp"
#include "multifold/horner.hpp"
#include "multifold/poly.hpp"
#include "multifold/reduction.hpp"
#include "multifold/sturm.hpp"

namespace multifold {

inline Rational default_tolerance() { return Rational(1, 1000000000000UL); }

struct RealRoot {
    Rational value;
    /// (lo, hi] holding exactly one distinct root.
    Interval isolating;
    /// |p(value)| for the caller's polynomial.
    Rational residual;
    bool certified = false;
    unsigned multiplicity = 1;
};

struct RootReport {
    std::vector<RealRoot> roots;
    Rational bound;
    Rational tolerance;
};

struct ComplexRoot {
    Rational re;
    Rational im;
    /// |Re p(re + i·im)| + |Im p(re + i·im)|, an exact upper bound on the modulus.
    Rational residual;
};

struct ComplexRootReport {
    std::vector<ComplexRoot> pairs;
    RealImagReduction reduction;
    Rational tolerance;
};

/// True iff p has exactly one distinct real root in (iv.lo, iv.hi].
inline bool certify(const Poly& p, const Interval& iv) {
    if (p.degree() < 1) return false;
    return count_real_roots(sturm_chain(p), iv) == 1;
}

namespace detail {

/// The rational with the smallest denominator in [lo, hi], 0 <= lo <= hi.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return Rational(fl + 1);
    Rational inner = simplest_between(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
    return Rational(fl + 1 / inner);
}

}  // namespace detail

/// Slides sheet x across the closed interval [iv.lo, iv.hi] until the final
/// pair's inner edges touch: bisection on the sign of the gap, which the
/// Sturm chain guarantees changes exactly once in the interval. Stops once
/// the bracket is no wider than `tol` and |gap| ≤ tol, or on an exact touch.
inline Rational roll_to_alignment(const FoldScript& script, const Interval& iv, const Rational& tol) {
    if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
    if (sgn(iv.lo) < 0 || iv.hi > script.bound()) {
        throw DomainError("rolling interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] leaves [0, " +
                          to_string(script.bound()) + "]");
    }
    const Scene scene = elaborate(script);
    if (!scene.final_pair || scene.iterations.empty()) throw DomainError("script has no alignment to roll to");

    const SturmChain chain = sturm_chain(script.source());
    int count = count_real_roots(chain, iv);
    if (sgn(chain.base()(iv.lo)) == 0) ++count;
    if (count == 0) throw NoRoot("no root in [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]");
    if (count > 1) throw NotIsolated(std::to_string(count) + " roots in the rolling interval; split it first");

    const StripPair& pair = *scene.final_pair;
    auto gap_at = [&](const Rational& x) { return Rational(pair.other.at(x) - pair.loc_zero.at(x)); };

    Rational lo = iv.lo;
    Rational hi = iv.hi;
    const Rational g_lo = gap_at(lo);
    if (sgn(g_lo) == 0) return lo;
    const Rational g_hi = gap_at(hi);
    if (sgn(g_hi) == 0) return hi;
    const int sign_lo = sgn(g_lo);
    if (sign_lo == sgn(g_hi)) throw EvenTouch("the gap touches zero without changing sign; source is not squarefree");

    constexpr int max_halvings = 1 << 16;
    for (int i = 0; i < max_halvings; ++i) {
        Rational mid = (lo + hi) / 2;
        Rational g = gap_at(mid);
        int s = sgn(g);
        if (s == 0) return mid;
        if (hi - lo <= tol && abs(g) <= tol) {
            // a root with a small denominator is met exactly
            Rational simple = detail::simplest_between(lo, hi);
            return sgn(gap_at(simple)) == 0 ? simple : mid;
        }
        if (s == sign_lo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    throw InternalError("rolling did not converge");
}

namespace detail {

inline unsigned root_multiplicity(const std::vector<Poly>& decomposition, const Interval& iv) {
    for (std::size_t i = 0; i < decomposition.size(); ++i) {
        if (decomposition[i].degree() >= 1 && count_real_roots(sturm_chain(decomposition[i]), iv) == 1) {
            return static_cast<unsigned>(i + 1);
        }
    }
    throw InternalError("root not found in the squarefree decomposition");
}

}  // namespace detail

/// Every real root of p, each once, ascending. Works on the squarefree part;
/// positive roots are rolled on its script directly, negative ones on the
/// script of q(-x) and negated back, so sheet x only ever moves over [0, B].
inline RootReport solve_real(const Poly& p, const Rational& tol = default_tolerance()) {
    if (p.is_zero()) throw DomainError("cannot solve the zero polynomial");
    if (p.degree() < 1) throw DomainError("cannot solve a constant polynomial");
    if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");

    const Poly q = squarefree_part(p);
    const Rational bound = cauchy_root_bound(p);
    const SturmChain chain = sturm_chain(q);
    const std::vector<Interval> intervals = isolate_in(chain, Interval(-bound, bound));
    const FoldScript positive = compile(q, bound);
    const FoldScript negative = compile(negate_variable(q), bound);
    const std::vector<Poly> decomposition = squarefree_decomposition(p);

    RootReport report;
    report.bound = bound;
    report.tolerance = tol;

    for (const Interval& iv : intervals) {
        // which side of zero to roll on, and over what window
        bool on_negative_side = false;
        Interval window;
        if (sgn(iv.hi) <= 0) {
            on_negative_side = true;
            window = Interval(-iv.hi, -iv.lo);
        } else if (sgn(iv.lo) >= 0) {
            window = iv;
        } else if (sgn(q(Rational(0))) == 0 || count_real_roots(chain, Interval(Rational(0), iv.hi)) == 1) {
            window = Interval(Rational(0), iv.hi);
        } else {
            on_negative_side = true;
            window = Interval(Rational(0), -iv.lo);
        }
        const FoldScript& script = on_negative_side ? negative : positive;

        Rational inner_tol = tol;
        Rational value;
        for (int attempt = 0;; ++attempt) {
            Rational x = roll_to_alignment(script, window, inner_tol);
            value = on_negative_side ? Rational(-x) : x;
            if (abs(eval_horner(p, value)) <= tol) break;
            if (attempt == 64) throw InternalError("could not meet the residual tolerance");
            inner_tol /= 16;
        }
        RealRoot root;
        root.residual = abs(eval_horner(p, value));
        root.value = std::move(value);
        root.isolating = iv;
        root.certified = certify(q, iv);
        root.multiplicity = detail::root_multiplicity(decomposition, iv);
        report.roots.push_back(std::move(root));
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return report;
}

/// p(re + i·im) as (real, imaginary) parts, exactly.
inline std::pair<Rational, Rational> eval_complex(const Poly& p, const Rational& re, const Rational& im) {
    Rational acc_re(0);
    Rational acc_im(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        Rational next_re = acc_re * re - acc_im * im + *it;
        Rational next_im = acc_re * im + acc_im * re;
        acc_re = std::move(next_re);
        acc_im = std::move(next_im);
    }
    return {acc_re, acc_im};
}

/// Complex roots from real solves of q_re and q_im: every pairing (a, ±b)
/// is tested against p and kept when its residual is within
/// tol · Σ|a_k|·r^k, r = max(1, |a| + |b|). Components are solved to
/// tol / (4n) so a true root's residual lands well inside that threshold.
inline ComplexRootReport solve_complex(const Poly& p, const Rational& tol = default_tolerance()) {
    if (p.is_zero()) throw DomainError("cannot solve the zero polynomial");
    if (p.degree() < 1) throw DomainError("cannot solve a constant polynomial");
    if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");

    ComplexRootReport report;
    report.reduction = reduce(p);
    report.tolerance = tol;
    const Rational component_tol = tol / (4 * static_cast<long>(p.degree()));

    const RootReport re_roots = solve_real(report.reduction.q_re, component_tol);
    const RootReport im_roots = solve_real(report.reduction.q_im, component_tol);

    std::vector<Rational> ims;
    for (const auto& r : im_roots.roots) {
        ims.push_back(r.value);
        ims.push_back(-r.value);
    }
    std::sort(ims.begin(), ims.end());
    ims.erase(std::unique(ims.begin(), ims.end()), ims.end());

    for (const auto& a : re_roots.roots) {
        for (const auto& b : ims) {
            auto [pr, pi] = eval_complex(p, a.value, b);
            Rational residual = abs(pr) + abs(pi);
            Rational radius = abs(a.value) + abs(b);
            if (radius < 1) radius = 1;
            if (residual <= tol * majorant(p, radius)) report.pairs.push_back(ComplexRoot{a.value, b, residual});
        }
    }
    return report;
}

}  // namespace multifold
