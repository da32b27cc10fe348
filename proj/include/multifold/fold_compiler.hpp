#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/geometry.hpp"
#include "multifold/poly.hpp"

namespace multifold {

namespace steps {

/// Book fold through the square, unfolded; the vertical line u = 0.
struct ZeroCrease {
    friend bool operator==(const ZeroCrease&, const ZeroCrease&) = default;
};

/// Crease parallel to the zero crease, `unit` to its right.
struct OneCrease {
    Rational unit{1};
    friend bool operator==(const OneCrease&, const OneCrease&) = default;
};

/// Lower-left corner folded to the center: the 45° reference v = u.
struct DiagonalReference {
    friend bool operator==(const DiagonalReference&, const DiagonalReference&) = default;
};

/// Sliding sheet whose left edge sits at u = parameter.
struct PlaceSheetX {
    std::string parameter{"x"};
    friend bool operator==(const PlaceSheetX&, const PlaceSheetX&) = default;
};

struct SeedPair {
    Rational coefficient;
    friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

/// Maps the current pair's gap d to x·d + coefficient; `index` is the
/// coefficient's degree k.
struct IterationStep {
    std::size_t index = 0;
    Rational coefficient;
    Rational offset;
    friend bool operator==(const IterationStep&, const IterationStep&) = default;
};

/// Alignment condition: the final pair's inner edges touch.
struct AlignmentCheck {
    friend bool operator==(const AlignmentCheck&, const AlignmentCheck&) = default;
};

}  // namespace steps

using FoldStep = std::variant<steps::ZeroCrease, steps::OneCrease, steps::DiagonalReference, steps::PlaceSheetX,
                              steps::SeedPair, steps::IterationStep, steps::AlignmentCheck>;

inline std::string_view step_kind(const FoldStep& step) {
    static constexpr std::string_view names[] = {"ZeroCrease", "OneCrease",     "DiagonalReference", "PlaceSheetX",
                                                 "SeedPair",   "IterationStep", "AlignmentCheck"};
    return names[step.index()];
}

/// Vertical strips for the 45° transfers go at u = base + k·stride, to the
/// right of every position sheet x can reach.
struct PlacementPolicy {
    Rational base;
    Rational stride{1};

    static PlacementPolicy for_bound(const Rational& bound) { return PlacementPolicy{bound + 1, Rational(1)}; }

    Rational offset(std::size_t k) const { return base + stride * static_cast<unsigned long>(k); }

    friend bool operator==(const PlacementPolicy&, const PlacementPolicy&) = default;
};

/// Fold steps compiled from a polynomial. Steps can only be appended; a
/// prefix of a script is exactly the script as it stood at that point.
class FoldScript {
public:
    FoldScript() = default;
    FoldScript(Poly source, Rational bound) : source_(std::move(source)), bound_(std::move(bound)) {}

    const Poly& source() const noexcept { return source_; }
    /// Largest |x| the sheets are sized for.
    const Rational& bound() const noexcept { return bound_; }
    const std::vector<FoldStep>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }

    void append(FoldStep step) { steps_.push_back(std::move(step)); }

    /// The first m steps, same source and bound.
    FoldScript prefix(std::size_t m) const {
        FoldScript out(source_, bound_);
        out.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(std::min(m, steps_.size())));
        return out;
    }

    friend bool operator==(const FoldScript&, const FoldScript&) = default;

private:
    Poly source_;
    Rational bound_{0};
    std::vector<FoldStep> steps_;
};

using StepObserver = std::function<void(const FoldScript&)>;

/// Setup creases and sheet x, the seeded pair holding a_n, one iteration per
/// remaining coefficient (a_{n-1} down to a_0), then the alignment check.
/// `bound` sizes the placement; it is raised to the Cauchy bound of p when
/// smaller. `observer` sees the script after every appended step.
inline FoldScript compile(const Poly& p, const Rational& bound = Rational(0), const StepObserver& observer = {}) {
    if (p.is_zero()) throw DomainError("cannot compile the zero polynomial");
    if (p.degree() < 1) throw DomainError("cannot compile a constant polynomial: no rolling parameter");
    Rational effective = cauchy_root_bound(p);
    if (bound > effective) effective = bound;

    FoldScript script(p, effective);
    auto append = [&](FoldStep step) {
        script.append(std::move(step));
        if (observer) observer(script);
    };
    append(steps::ZeroCrease{});
    append(steps::OneCrease{});
    append(steps::DiagonalReference{});
    append(steps::PlaceSheetX{});
    const auto n = static_cast<std::size_t>(p.degree());
    append(steps::SeedPair{p.coeffs()[n]});
    const PlacementPolicy placement = PlacementPolicy::for_bound(effective);
    for (std::size_t k = n; k-- > 0;) append(steps::IterationStep{k, p.coeffs()[k], placement.offset(k)});
    append(steps::AlignmentCheck{});
    return script;
}

}  // namespace multifold
