#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/fold_compiler.hpp"
#include "multifold/geometry.hpp"
#include "multifold/horner.hpp"
#include "multifold/poly.hpp"

namespace multifold {

/// What an element is in the construction.
enum class Role {
    zero_crease,
    one_crease,
    diagonal_reference,
    sheet_x_edge,
    seed_zero_edge,
    seed_other_edge,
    rect_diagonal,
    auxiliary_edge,
    y_edge,
    transfer_z,
    transfer_y,
    vertical_strip,
    pair_zero_edge,
    pair_other_edge,
};

inline std::string_view role_name(Role r) {
    static constexpr std::string_view names[] = {
        "zero_crease",    "one_crease",     "diagonal_reference", "sheet_x_edge", "seed_zero_edge",
        "seed_other_edge", "rect_diagonal", "auxiliary_edge",     "y_edge",       "transfer_z",
        "transfer_y",     "vertical_strip", "pair_zero_edge",     "pair_other_edge",
    };
    return names[static_cast<std::size_t>(r)];
}

// Element geometry over a coordinate type: ParamScalar for the symbolic
// scene, Rational once x is fixed.
template <class Scalar>
struct VerticalLine {
    Scalar u;
    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

template <class Scalar>
struct HorizontalEdge {
    Scalar v;
    friend bool operator==(const HorizontalEdge&, const HorizontalEdge&) = default;
};

/// v = slope·u + intercept
template <class Scalar>
struct DiagonalEdge {
    Scalar slope;
    Scalar intercept;
    friend bool operator==(const DiagonalEdge&, const DiagonalEdge&) = default;
};

template <class Scalar>
using Geometry = std::variant<VerticalLine<Scalar>, HorizontalEdge<Scalar>, DiagonalEdge<Scalar>>;

template <class Scalar>
struct BasicElement {
    std::size_t id = 0;
    std::size_t provenance = 0;  // index of the originating FoldStep
    Role role = Role::zero_crease;
    Geometry<Scalar> geometry;

    friend bool operator==(const BasicElement&, const BasicElement&) = default;
};

using Element = BasicElement<ParamScalar>;
using ConcreteElement = BasicElement<Rational>;

/// Element ids laid down by one iteration.
struct IterationRecord {
    std::size_t step = 0;
    std::size_t index = 0;
    Rational coefficient;
    Rational offset;
    bool sheet_a_placed = false;
    std::size_t input_zero = 0;
    std::size_t input_other = 0;
    std::size_t rect_diagonal = 0;
    std::size_t auxiliary = 0;
    std::size_t y_edge = 0;
    std::size_t transfer_z = 0;
    std::size_t transfer_y = 0;
    std::size_t vertical = 0;
    std::size_t output_zero = 0;
    std::size_t output_other = 0;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct Extents {
    Rational width;
    Rational height;

    friend bool operator==(const Extents&, const Extents&) = default;
};

/// Ids of the fixed setup elements.
struct SetupIds {
    std::size_t zero_crease = 0;
    std::size_t one_crease = 1;
    std::size_t diagonal_reference = 2;
    std::size_t sheet_x = 3;
};

struct Scene {
    Poly source;
    std::vector<Element> elements;
    std::vector<IterationRecord> iterations;
    std::optional<StripPair> final_pair;
    std::optional<std::size_t> final_zero_edge;
    std::optional<std::size_t> final_other_edge;
    /// Gap after each iteration, in order.
    std::vector<ParamScalar> trace;
    Extents extents;
};

struct ConcreteScene {
    Rational x;
    std::vector<ConcreteElement> elements;
    std::vector<IterationRecord> iterations;
    std::optional<Rational> final_gap;
    std::optional<std::size_t> final_zero_edge;
    std::optional<std::size_t> final_other_edge;
    Extents extents;
};

inline constexpr std::size_t setup_element_count = 4;
inline constexpr std::size_t seed_element_count = 2;
inline constexpr std::size_t iteration_element_count = 8;

inline Extents paper_extents(const FoldScript& script, const Rational& bound);

namespace detail {

inline std::size_t add_element(std::vector<Element>& elements, std::size_t step, Role role,
                               Geometry<ParamScalar> geometry) {
    const std::size_t id = elements.size();
    elements.push_back(Element{id, step, role, std::move(geometry)});
    return id;
}

}  // namespace detail

/// Lays out every element of the script with coordinates as polynomials in
/// x. Accepts any well-ordered prefix of a compiled script:
///   ZeroCrease OneCrease DiagonalReference PlaceSheetX SeedPair
///   IterationStep* AlignmentCheck?
/// with iteration indices counting down to 0.
inline Scene elaborate(const FoldScript& script) {
    Scene scene;
    scene.source = script.source();
    const auto& steps = script.steps();
    static constexpr std::size_t setup_order[] = {0, 1, 2, 3, 4};  // variant indices
    std::optional<StripPair> pair;
    std::optional<std::size_t> expected_index;
    bool aligned = false;

    for (std::size_t i = 0; i < steps.size(); ++i) {
        const FoldStep& step = steps[i];
        if (aligned) throw DomainError("malformed script: steps after AlignmentCheck");
        if (i < std::size(setup_order) && step.index() != setup_order[i]) {
            static constexpr std::string_view expected[] = {"ZeroCrease", "OneCrease", "DiagonalReference",
                                                            "PlaceSheetX", "SeedPair"};
            throw DomainError("malformed script: step " + std::to_string(i) + " should be " +
                              std::string(expected[i]) + ", found " + std::string(step_kind(step)));
        }
        if (i >= std::size(setup_order) && !std::holds_alternative<steps::IterationStep>(step) &&
            !std::holds_alternative<steps::AlignmentCheck>(step)) {
            throw DomainError("malformed script: unexpected " + std::string(step_kind(step)) + " at step " +
                              std::to_string(i));
        }
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, steps::ZeroCrease>) {
                    detail::add_element(scene.elements, i, Role::zero_crease,
                                        VerticalLine<ParamScalar>{ParamScalar::constant(Rational(0))});
                } else if constexpr (std::is_same_v<T, steps::OneCrease>) {
                    if (s.unit != 1) throw DomainError("malformed script: unit length must be 1");
                    detail::add_element(scene.elements, i, Role::one_crease,
                                        VerticalLine<ParamScalar>{ParamScalar::constant(s.unit)});
                } else if constexpr (std::is_same_v<T, steps::DiagonalReference>) {
                    detail::add_element(
                        scene.elements, i, Role::diagonal_reference,
                        DiagonalEdge<ParamScalar>{ParamScalar::constant(Rational(1)), ParamScalar::constant(Rational(0))});
                } else if constexpr (std::is_same_v<T, steps::PlaceSheetX>) {
                    detail::add_element(scene.elements, i, Role::sheet_x_edge,
                                        VerticalLine<ParamScalar>{ParamScalar::parameter()});
                } else if constexpr (std::is_same_v<T, steps::SeedPair>) {
                    pair = seed_pair(s.coefficient);
                    detail::add_element(scene.elements, i, Role::seed_zero_edge, HorizontalEdge<ParamScalar>{pair->loc_zero});
                    detail::add_element(scene.elements, i, Role::seed_other_edge, HorizontalEdge<ParamScalar>{pair->other});
                    scene.final_zero_edge = scene.elements.size() - 2;
                    scene.final_other_edge = scene.elements.size() - 1;
                    if (script.source().degree() < 1) throw DomainError("malformed script: source has no parameter");
                    expected_index = static_cast<std::size_t>(script.source().degree()) - 1;
                } else if constexpr (std::is_same_v<T, steps::IterationStep>) {
                    if (!pair || !expected_index) throw DomainError("malformed script: iteration before SeedPair");
                    if (s.index != *expected_index) {
                        throw DomainError("malformed script: iteration index " + std::to_string(s.index) +
                                          ", expected " + std::to_string(*expected_index));
                    }
                    IterationGeometry g = iteration_step(*pair, s.coefficient, s.offset);
                    IterationRecord rec;
                    rec.step = i;
                    rec.index = s.index;
                    rec.coefficient = s.coefficient;
                    rec.offset = s.offset;
                    rec.sheet_a_placed = g.sheet_a_placed;
                    rec.input_zero = *scene.final_zero_edge;
                    rec.input_other = *scene.final_other_edge;
                    auto& el = scene.elements;
                    rec.rect_diagonal = detail::add_element(
                        el, i, Role::rect_diagonal, DiagonalEdge<ParamScalar>{g.rect_diagonal_slope, g.rect_diagonal_intercept});
                    rec.auxiliary = detail::add_element(el, i, Role::auxiliary_edge, HorizontalEdge<ParamScalar>{g.auxiliary_edge});
                    rec.y_edge = detail::add_element(el, i, Role::y_edge, HorizontalEdge<ParamScalar>{g.y_edge});
                    const ParamScalar one = ParamScalar::constant(Rational(1));
                    rec.transfer_z =
                        detail::add_element(el, i, Role::transfer_z, DiagonalEdge<ParamScalar>{one, g.transfer_z_intercept});
                    rec.transfer_y =
                        detail::add_element(el, i, Role::transfer_y, DiagonalEdge<ParamScalar>{one, g.transfer_y_intercept});
                    rec.vertical = detail::add_element(el, i, Role::vertical_strip,
                                                       VerticalLine<ParamScalar>{ParamScalar::constant(g.vertical_strip_u)});
                    rec.output_zero =
                        detail::add_element(el, i, Role::pair_zero_edge, HorizontalEdge<ParamScalar>{g.output.loc_zero});
                    rec.output_other =
                        detail::add_element(el, i, Role::pair_other_edge, HorizontalEdge<ParamScalar>{g.output.other});
                    pair = g.output;
                    scene.final_zero_edge = rec.output_zero;
                    scene.final_other_edge = rec.output_other;
                    scene.trace.push_back(g.output.gap());
                    scene.iterations.push_back(rec);
                    expected_index = s.index == 0 ? std::nullopt : std::optional<std::size_t>(s.index - 1);
                } else if constexpr (std::is_same_v<T, steps::AlignmentCheck>) {
                    if (!pair || expected_index) throw DomainError("malformed script: AlignmentCheck before the last iteration");
                    aligned = true;
                }
            },
            step);
    }
    scene.final_pair = pair;
    if (script.source().degree() >= 1 && sgn(script.bound()) > 0) scene.extents = paper_extents(script, script.bound());
    return scene;
}

/// The final pair's signed gap as a polynomial in x.
inline Poly symbolic_gap(const FoldScript& script) {
    Scene scene = elaborate(script);
    if (!scene.final_pair) throw DomainError("script has no strip pair");
    return scene.final_pair->gap().poly();
}

/// Freezes every coordinate at a concrete x on the sheet.
inline ConcreteScene evaluate(const Scene& scene, const Rational& x) {
    if (sgn(x) < 0 || x > scene.extents.width) {
        throw DomainError("x = " + to_string(x) + " is off the sheet; allowed range is [0, " +
                          to_string(scene.extents.width) + "]");
    }
    ConcreteScene cs;
    cs.x = x;
    cs.iterations = scene.iterations;
    cs.final_zero_edge = scene.final_zero_edge;
    cs.final_other_edge = scene.final_other_edge;
    cs.extents = scene.extents;
    cs.elements.reserve(scene.elements.size());
    for (const auto& e : scene.elements) {
        ConcreteElement c{e.id, e.provenance, e.role, {}};
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, VerticalLine<ParamScalar>>) {
                    c.geometry = VerticalLine<Rational>{g.u.at(x)};
                } else if constexpr (std::is_same_v<T, HorizontalEdge<ParamScalar>>) {
                    c.geometry = HorizontalEdge<Rational>{g.v.at(x)};
                } else {
                    c.geometry = DiagonalEdge<Rational>{g.slope.at(x), g.intercept.at(x)};
                }
            },
            e.geometry);
        cs.elements.push_back(std::move(c));
    }
    if (scene.final_pair) cs.final_gap = scene.final_pair->gap().at(x);
    return cs;
}

struct Assertion {
    std::size_t iteration = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Diagnostics {
    std::vector<Assertion> assertions;

    bool all_passed() const {
        return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
    }
};

namespace detail {

template <class G>
const G* as(const ConcreteScene& cs, std::size_t id) {
    if (id >= cs.elements.size()) return nullptr;
    return std::get_if<G>(&cs.elements[id].geometry);
}

}  // namespace detail

/// Re-derives each iteration's intersections from the concrete element
/// coordinates alone. Two assertions per iteration:
///   rect_diagonal: the diagonal through Z and (1, other) crosses sheet x's
///     left edge at (x, loc_zero + x·d), on the auxiliary edge;
///   transfer: Y sits `a` from the auxiliary edge, the 45° strips pass through
///     Z and Y, and they cut the vertical strip exactly at the new pair's edges,
///     so the new gap equals the Z–Y distance.
inline Diagnostics check_intersections(const ConcreteScene& cs) {
    using H = HorizontalEdge<Rational>;
    using V = VerticalLine<Rational>;
    using D = DiagonalEdge<Rational>;
    Diagnostics diag;
    const SetupIds setup;
    const V* sheet_x = detail::as<V>(cs, setup.sheet_x);
    const V* one = detail::as<V>(cs, setup.one_crease);

    for (std::size_t k = 0; k < cs.iterations.size(); ++k) {
        const IterationRecord& rec = cs.iterations[k];
        const H* in_zero = detail::as<H>(cs, rec.input_zero);
        const H* in_other = detail::as<H>(cs, rec.input_other);
        const D* diagonal = detail::as<D>(cs, rec.rect_diagonal);
        const H* aux = detail::as<H>(cs, rec.auxiliary);
        const H* y = detail::as<H>(cs, rec.y_edge);
        const D* tz = detail::as<D>(cs, rec.transfer_z);
        const D* ty = detail::as<D>(cs, rec.transfer_y);
        const V* vertical = detail::as<V>(cs, rec.vertical);
        const H* out_zero = detail::as<H>(cs, rec.output_zero);
        const H* out_other = detail::as<H>(cs, rec.output_other);

        Assertion first{k, "rect_diagonal", false, {}};
        if (!sheet_x || !one || !in_zero || !in_other || !diagonal || !aux) {
            first.detail = "missing element";
        } else {
            const Rational z = in_zero->v;
            const Rational d = in_other->v - z;
            const Rational through_z = diagonal->intercept;
            const Rational at_one = diagonal->slope * one->u + diagonal->intercept;
            const Rational at_sheet_x = diagonal->slope * sheet_x->u + diagonal->intercept;
            const Rational expected = z + sheet_x->u * d;
            if (through_z != z) {
                first.detail = "diagonal misses Z: intercept " + to_string(through_z) + " vs " + to_string(z);
            } else if (at_one != in_other->v) {
                first.detail = "diagonal misses the rectangle corner on the one crease";
            } else if (at_sheet_x != expected || aux->v != expected) {
                first.detail = "crossing with sheet x at v = " + to_string(at_sheet_x) + ", auxiliary edge at " +
                               to_string(aux->v) + ", expected " + to_string(expected);
            } else {
                first.passed = true;
            }
        }
        diag.assertions.push_back(std::move(first));

        Assertion second{k, "transfer", false, {}};
        if (!in_zero || !aux || !y || !tz || !ty || !vertical || !out_zero || !out_other) {
            second.detail = "missing element";
        } else {
            const Rational z = in_zero->v;
            const Rational c = vertical->u;
            if (y->v - aux->v != rec.coefficient) {
                second.detail = "sheet a spans " + to_string(y->v - aux->v) + ", expected " + to_string(rec.coefficient);
            } else if (tz->slope != 1 || ty->slope != 1) {
                second.detail = "transfer strips are not at 45 degrees";
            } else if (tz->intercept != z || ty->intercept != y->v) {
                second.detail = "transfer strips miss Z or Y on the zero crease";
            } else if (tz->slope * c + tz->intercept != out_zero->v || ty->slope * c + ty->intercept != out_other->v) {
                second.detail = "new pair is not at the transferred intersections";
            } else if (out_other->v - out_zero->v != y->v - z) {
                second.detail = "transferred gap differs from the Z-Y distance";
            } else {
                second.passed = true;
            }
        }
        diag.assertions.push_back(std::move(second));
    }
    return diag;
}

/// Sliding parameters the alignment condition depends on. Each PlaceSheetX
/// introduces one; a lone sheet is named by its step, several are x1, x2, ….
/// For a single sheet the parameter counts only if the final gap actually
/// varies with it.
inline std::set<std::string> free_parameters(const FoldScript& script) {
    std::vector<std::string> declared;
    for (const auto& step : script.steps()) {
        if (const auto* s = std::get_if<steps::PlaceSheetX>(&step)) declared.push_back(s->parameter);
    }
    std::set<std::string> out;
    if (declared.empty()) return out;
    if (declared.size() > 1) {
        for (std::size_t i = 0; i < declared.size(); ++i) out.insert("x" + std::to_string(i + 1));
        return out;
    }
    Scene scene = elaborate(script);
    if (scene.final_pair && !scene.final_pair->gap().is_constant()) out.insert(declared.front());
    return out;
}

inline const Rational& extents_margin() {
    static const Rational margin(1);
    return margin;
}

/// Sheet size that holds every coordinate for x in [0, bound].
///
/// The zero-locating edge climbs by each transfer offset, and every other
/// vertical coordinate sits within the Horner partial's majorant
/// Σ|a_j|·bound^j of it, so
///   height = 2·(max_k majorant(b_k) + Σ offsets + margin),
///   width  = max(bound, 1, offsets) + margin,
/// with u running over [0, width] and v over [-height/2, height/2].
inline Extents paper_extents(const FoldScript& script, const Rational& bound) {
    if (sgn(bound) <= 0) throw DomainError("paper extents need a positive bound");
    Rational widest = bound > 1 ? bound : Rational(1);
    Rational offsets_sum(0);
    Rational partial_majorant(0);
    Rational largest_majorant(0);
    for (const auto& step : script.steps()) {
        if (const auto* seed = std::get_if<steps::SeedPair>(&step)) {
            partial_majorant = abs(seed->coefficient);
        } else if (const auto* it = std::get_if<steps::IterationStep>(&step)) {
            partial_majorant = partial_majorant * bound + abs(it->coefficient);
            offsets_sum += abs(it->offset);
            if (it->offset > widest) widest = it->offset;
        } else {
            continue;
        }
        if (partial_majorant > largest_majorant) largest_majorant = partial_majorant;
    }
    const Rational& margin = extents_margin();
    return Extents{widest + margin, 2 * (largest_majorant + offsets_sum + margin)};
}

/// Elements whose coordinates fall outside the extents: u outside
/// [0, width], v (or a diagonal's intercept) outside [-height/2, height/2].
inline std::vector<std::size_t> out_of_extents(const ConcreteScene& cs, const Extents& extents) {
    const Rational half = extents.height / 2;
    auto v_ok = [&](const Rational& v) { return -half <= v && v <= half; };
    std::vector<std::size_t> bad;
    for (const auto& e : cs.elements) {
        bool ok = std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, VerticalLine<Rational>>) {
                    return sgn(g.u) >= 0 && g.u <= extents.width;
                } else if constexpr (std::is_same_v<T, HorizontalEdge<Rational>>) {
                    return v_ok(g.v);
                } else {
                    return v_ok(g.intercept);
                }
            },
            e.geometry);
        if (!ok) bad.push_back(e.id);
    }
    return bad;
}

inline const Rational& strip_slack_factor() {
    static const Rational slack(5, 4);
    return slack;
}

/// Length of the ultra-thin strip the whole apparatus is folded from.
/// Vertical elements span the height, horizontal ones the width, diagonals
/// at most width + height. Coefficient sheets add |a|. The sum is scaled by
/// a fixed slack factor for the connecting strips.
inline Rational element_length_subtotal(const Scene& scene, const Extents& extents) {
    Rational subtotal(0);
    for (const auto& e : scene.elements) {
        subtotal += std::visit(
            [&](const auto& g) -> Rational {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, VerticalLine<ParamScalar>>) {
                    return extents.height;
                } else if constexpr (std::is_same_v<T, HorizontalEdge<ParamScalar>>) {
                    return extents.width;
                } else {
                    return extents.width + extents.height;
                }
            },
            e.geometry);
    }
    return subtotal;
}

inline Rational total_strip_length(const FoldScript& script, const Extents& extents) {
    const Scene scene = elaborate(script);
    Rational total = element_length_subtotal(scene, extents);
    for (const auto& step : script.steps()) {
        if (const auto* seed = std::get_if<steps::SeedPair>(&step)) total += abs(seed->coefficient);
        if (const auto* it = std::get_if<steps::IterationStep>(&step)) total += abs(it->coefficient);
    }
    return total * strip_slack_factor();
}

/// True when every prefix of the script elaborates to a prefix of the full
/// scene: no step removes or moves an element laid down earlier.
inline bool audit_no_unfolding(const FoldScript& script) {
    const Scene full = elaborate(script);
    for (std::size_t m = 0; m <= script.size(); ++m) {
        const Scene partial = elaborate(script.prefix(m));
        if (partial.elements.size() > full.elements.size()) return false;
        if (!std::equal(partial.elements.begin(), partial.elements.end(), full.elements.begin())) return false;
    }
    return true;
}

}  // namespace multifold
