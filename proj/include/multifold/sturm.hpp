#pragma once

#include <cstddef>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/poly.hpp"

namespace multifold {

/// Closed-or-half-open rational interval; its meaning is fixed by the
/// operation that consumes it (Sturm counts use (lo, hi]).
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw DomainError("interval with lo > hi");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// s_0 = squarefree part of the source, s_1 = s_0', s_{i+1} = -rem(s_{i-1}, s_i),
/// ending at a nonzero constant.
struct SturmChain {
    std::vector<Poly> seq;

    const Poly& base() const { return seq.front(); }
};

inline SturmChain sturm_chain(const Poly& p) {
    if (p.degree() < 1) throw DomainError("Sturm chain needs a polynomial of degree >= 1");
    SturmChain chain;
    chain.seq.push_back(squarefree_part(p));
    chain.seq.push_back(derivative(chain.seq.front()));
    while (chain.seq.back().degree() > 0) {
        const std::size_t n = chain.seq.size();
        Poly next = -remainder(chain.seq[n - 2], chain.seq[n - 1]);
        if (next.is_zero()) throw InternalError("Sturm chain of a squarefree polynomial hit zero");
        chain.seq.push_back(std::move(next));
    }
    return chain;
}

/// Sign changes along the chain at x, zeros skipped.
inline int sign_variations(const SturmChain& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& s : chain.seq) {
        int current = sgn(s(x));
        if (current == 0) continue;
        if (last != 0 && current != last) ++variations;
        last = current;
    }
    return variations;
}

/// Distinct real roots of s_0 in (lo, hi]. Exact even when an endpoint is a
/// root: with zeros skipped, V is right-continuous at roots of s_0.
inline int count_real_roots(const SturmChain& chain, const Interval& iv) {
    if (iv.lo == iv.hi) return 0;
    return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

namespace detail {

/// A split point strictly inside (lo, hi) that is not a root of `p`: the
/// midpoint, else the first of lo + w·j/q (q = 3, 4, …) that misses every root.
inline Rational non_root_split(const Poly& p, const Rational& lo, const Rational& hi) {
    const Rational w = hi - lo;
    Rational mid = lo + w / 2;
    if (sgn(p(mid)) != 0) return mid;
    for (long q = 3;; ++q) {
        for (long j = 1; j < q; ++j) {
            Rational candidate = lo + w * Rational(j, q);
            if (sgn(p(candidate)) != 0) return candidate;
        }
    }
}

}  // namespace detail

/// Splits (iv.lo, iv.hi] into subintervals containing exactly one distinct
/// root of the chain's base each, ordered by lower bound. New endpoints are
/// never roots.
inline std::vector<Interval> isolate_in(const SturmChain& chain, const Interval& iv) {
    std::vector<Interval> out;
    std::vector<std::pair<Interval, int>> stack;
    const int total = count_real_roots(chain, iv);
    if (total > 0) stack.emplace_back(iv, total);
    while (!stack.empty()) {
        auto [current, count] = stack.back();
        stack.pop_back();
        if (count == 1) {
            out.push_back(current);
            continue;
        }
        Rational split = detail::non_root_split(chain.base(), current.lo, current.hi);
        Interval left(current.lo, split);
        Interval right(split, current.hi);
        int left_count = count_real_roots(chain, left);
        int right_count = count - left_count;
        // push right first so the left half is processed first
        if (right_count > 0) stack.emplace_back(right, right_count);
        if (left_count > 0) stack.emplace_back(left, left_count);
    }
    return out;
}

/// Isolating intervals for every distinct real root, all inside (-B, B]
/// with B the Cauchy bound of p.
inline std::vector<Interval> isolate_real_roots(const Poly& p) {
    if (p.degree() < 1) throw DomainError("root isolation needs a polynomial of degree >= 1");
    const Rational bound = cauchy_root_bound(p);
    return isolate_in(sturm_chain(p), Interval(-bound, bound));
}

}  // namespace multifold
