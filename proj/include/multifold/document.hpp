#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "multifold/errors.hpp"
#include "multifold/fold_compiler.hpp"
#include "multifold/fold_simulator.hpp"
#include "multifold/parse.hpp"

namespace multifold {

/// On-disk form of a compiled script. Rationals are "p/q" strings, never
/// floats.
struct FoldScriptDocument {
    static constexpr int current_version = 1;

    int version = current_version;
    FoldScript script;
    Extents extents;

    friend bool operator==(const FoldScriptDocument&, const FoldScriptDocument&) = default;
};

inline FoldScriptDocument make_document(const FoldScript& script) {
    return FoldScriptDocument{FoldScriptDocument::current_version, script, paper_extents(script, script.bound())};
}

inline nlohmann::json step_to_json(const FoldStep& step) {
    nlohmann::json params = nlohmann::json::object();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, steps::OneCrease>) {
                params["unit"] = to_string(s.unit);
            } else if constexpr (std::is_same_v<T, steps::PlaceSheetX>) {
                params["parameter"] = s.parameter;
            } else if constexpr (std::is_same_v<T, steps::SeedPair>) {
                params["coefficient"] = to_string(s.coefficient);
            } else if constexpr (std::is_same_v<T, steps::IterationStep>) {
                params["index"] = s.index;
                params["coefficient"] = to_string(s.coefficient);
                params["offset"] = to_string(s.offset);
            }
        },
        step);
    return nlohmann::json{{"kind", std::string(step_kind(step))}, {"params", std::move(params)}};
}

inline nlohmann::json to_json(const FoldScriptDocument& doc) {
    nlohmann::json steps_json = nlohmann::json::array();
    for (const auto& step : doc.script.steps()) steps_json.push_back(step_to_json(step));
    return nlohmann::json{
        {"version", doc.version},
        {"polynomial", format_poly(doc.script.source())},
        {"steps", std::move(steps_json)},
        {"extents", {{"width", to_string(doc.extents.width)}, {"height", to_string(doc.extents.height)}}},
        {"metadata", {{"bound", to_string(doc.script.bound())}, {"step_count", doc.script.size()}}},
    };
}

inline std::string serialize(const FoldScriptDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace detail {

inline Rational json_rational(const nlohmann::json& j, std::string_view field) {
    if (!j.is_string()) throw ParseError("field '" + std::string(field) + "' must be a \"p/q\" string", 0);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("field '" + std::string(field) + "': " + e.what(), 0);
    }
}

inline FoldStep step_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const nlohmann::json params = j.value("params", nlohmann::json::object());
    if (kind == "ZeroCrease") return steps::ZeroCrease{};
    if (kind == "OneCrease") return steps::OneCrease{json_rational(params.at("unit"), "unit")};
    if (kind == "DiagonalReference") return steps::DiagonalReference{};
    if (kind == "PlaceSheetX") return steps::PlaceSheetX{params.value("parameter", std::string("x"))};
    if (kind == "SeedPair") return steps::SeedPair{json_rational(params.at("coefficient"), "coefficient")};
    if (kind == "IterationStep") {
        return steps::IterationStep{params.at("index").get<std::size_t>(),
                                    json_rational(params.at("coefficient"), "coefficient"),
                                    json_rational(params.at("offset"), "offset")};
    }
    if (kind == "AlignmentCheck") return steps::AlignmentCheck{};
    throw ParseError("unknown step kind '" + kind + "'", 0);
}

}  // namespace detail

/// Inverse of serialize. Malformed JSON or a schema mismatch is a ParseError;
/// for JSON syntax errors the position is the byte offset.
inline FoldScriptDocument parse_document(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
        FoldScriptDocument doc;
        doc.version = j.at("version").get<int>();
        if (doc.version != FoldScriptDocument::current_version) {
            throw ParseError("unsupported document version " + std::to_string(doc.version), 0);
        }
        const Poly source = poly_parse(j.at("polynomial").get<std::string>());
        const nlohmann::json& meta = j.at("metadata");
        doc.script = FoldScript(source, detail::json_rational(meta.at("bound"), "bound"));
        for (const auto& s : j.at("steps")) doc.script.append(detail::step_from_json(s));
        if (meta.at("step_count").get<std::size_t>() != doc.script.size()) {
            throw ParseError("metadata.step_count does not match the step list", 0);
        }
        const nlohmann::json& ext = j.at("extents");
        doc.extents = Extents{detail::json_rational(ext.at("width"), "width"),
                              detail::json_rational(ext.at("height"), "height")};
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed fold script document: ") + e.what(), 0);
    }
}

}  // namespace multifold
