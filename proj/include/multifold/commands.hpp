#pragma once

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "multifold/alignment_solver.hpp"
#include "multifold/document.hpp"
#include "multifold/errors.hpp"
#include "multifold/fold_compiler.hpp"
#include "multifold/fold_simulator.hpp"
#include "multifold/parse.hpp"
#include "multifold/reduction.hpp"
#include "multifold/svg.hpp"

// Command implementations behind the `multifold` tool. Each returns the
// document to print and reports problems by throwing multifold::Error.

namespace multifold::cli {

enum class OutputFormat { text, json, svg };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "svg") return OutputFormat::svg;
    throw Error("unknown output format '" + std::string(s) + "' (text, json, svg)", ExitCode::usage);
}

struct RunConfig {
    Rational tolerance = default_tolerance();
    std::optional<Rational> bound;
    OutputFormat format = OutputFormat::text;
    std::optional<Rational> x;
    bool complex = false;
};

inline constexpr const char* tolerance_env = "MULTIFOLD_DEFAULT_TOL";

/// Flag value, else $MULTIFOLD_DEFAULT_TOL, else 10^-12. Must be positive.
inline Rational resolve_tolerance(const std::optional<std::string>& flag) {
    std::optional<std::string> text = flag;
    if (!text) {
        if (const char* env = std::getenv(tolerance_env); env != nullptr && *env != '\0') text = env;
    }
    if (!text) return default_tolerance();
    Rational tol;
    try {
        tol = parse_decimal(*text);
    } catch (const ParseError& e) {
        throw Error(std::string("bad tolerance: ") + e.what(), ExitCode::usage);
    }
    if (sgn(tol) <= 0) throw Error("tolerance must be positive", ExitCode::usage);
    return tol;
}

/// The Cauchy bound, or the override when it is at least as large.
inline Rational resolve_bound(const Poly& p, const std::optional<Rational>& requested, std::ostream& warn) {
    Rational computed = cauchy_root_bound(p);
    if (!requested) return computed;
    if (*requested < computed) {
        warn << "warning: bound " << to_string(*requested) << " is below the root bound " << to_string(computed)
             << "; using " << to_string(computed) << "\n";
        return computed;
    }
    return *requested;
}

inline Poly parse_nonconstant(std::string_view text) {
    Poly p = poly_parse(text);
    if (p.is_zero()) throw DomainError("the zero polynomial has no roots to construct");
    if (p.degree() < 1) throw DomainError("constant polynomial: no rolling parameter");
    return p;
}

/// A path to a fold script document, or polynomial text to compile.
inline FoldScript load_script(const std::string& arg, const RunConfig& cfg, std::ostream& warn) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_document(buf.str()).script;
    }
    const Poly p = parse_nonconstant(arg);
    return compile(p, resolve_bound(p, cfg.bound, warn));
}

inline std::string describe(const Geometry<Rational>& g) {
    return std::visit(
        [](const auto& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, VerticalLine<Rational>>) {
                return "vertical u = " + to_string(e.u);
            } else if constexpr (std::is_same_v<T, HorizontalEdge<Rational>>) {
                return "horizontal v = " + to_string(e.v);
            } else {
                return "diagonal v = " + to_string(e.slope) + "*u + " + to_string(e.intercept);
            }
        },
        g);
}

inline nlohmann::json element_json(const ConcreteElement& e) {
    nlohmann::json j{{"id", e.id}, {"step", e.provenance}, {"role", std::string(role_name(e.role))}};
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, VerticalLine<Rational>>) {
                j["type"] = "vertical";
                j["u"] = to_string(g.u);
            } else if constexpr (std::is_same_v<T, HorizontalEdge<Rational>>) {
                j["type"] = "horizontal";
                j["v"] = to_string(g.v);
            } else {
                j["type"] = "diagonal";
                j["slope"] = to_string(g.slope);
                j["intercept"] = to_string(g.intercept);
            }
        },
        e.geometry);
    return j;
}

inline std::string cmd_compile(const std::string& polytext, const RunConfig& cfg, std::ostream& warn) {
    const Poly p = parse_nonconstant(polytext);
    const FoldScript script = compile(p, resolve_bound(p, cfg.bound, warn));
    const FoldScriptDocument doc = make_document(script);
    if (cfg.format == OutputFormat::json) return serialize(doc);
    if (cfg.format == OutputFormat::svg) throw Error("compile has no svg output; use render", ExitCode::usage);

    std::ostringstream os;
    os << "polynomial: " << format_poly(p) << "\n";
    os << "bound: " << to_string(script.bound()) << "\n";
    os << "extents: width " << to_string(doc.extents.width) << ", height " << to_string(doc.extents.height) << "\n";
    os << script.size() << " steps\n";
    for (std::size_t i = 0; i < script.size(); ++i) {
        const FoldStep& step = script.steps()[i];
        os << "  " << i << ". " << step_kind(step);
        if (const auto* seed = std::get_if<steps::SeedPair>(&step)) os << " a = " << to_string(seed->coefficient);
        if (const auto* it = std::get_if<steps::IterationStep>(&step)) {
            os << " k = " << it->index << ", a = " << to_string(it->coefficient) << ", strip at u = "
               << to_string(it->offset);
        }
        os << "\n";
    }
    return os.str();
}

inline ConcreteScene simulate_scene(const FoldScript& script, const RunConfig& cfg) {
    if (!cfg.x) throw Error("--x is required", ExitCode::usage);
    return evaluate(elaborate(script), *cfg.x);
}

inline std::string cmd_simulate(const std::string& input, const RunConfig& cfg, std::ostream& warn) {
    const FoldScript script = load_script(input, cfg, warn);
    const ConcreteScene cs = simulate_scene(script, cfg);
    const Diagnostics diag = check_intersections(cs);
    if (cfg.format == OutputFormat::svg) return render_svg(cs);
    if (cfg.format == OutputFormat::json) {
        nlohmann::json j;
        j["polynomial"] = format_poly(script.source());
        j["x"] = to_string(cs.x);
        j["extents"] = {{"width", to_string(cs.extents.width)}, {"height", to_string(cs.extents.height)}};
        j["elements"] = nlohmann::json::array();
        for (const auto& e : cs.elements) j["elements"].push_back(element_json(e));
        if (cs.final_gap) j["final_gap"] = to_string(*cs.final_gap);
        j["checks_passed"] = diag.all_passed();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "polynomial: " << format_poly(script.source()) << "\n";
    os << "x = " << to_string(cs.x) << "\n";
    os << "extents: width " << to_string(cs.extents.width) << ", height " << to_string(cs.extents.height) << "\n";
    os << "elements:\n";
    for (const auto& e : cs.elements) {
        os << "  [" << e.id << "] step " << e.provenance << " " << role_name(e.role) << ": " << describe(e.geometry)
           << "\n";
    }
    os << "intersection checks: " << (diag.all_passed() ? "pass" : "FAIL") << " (" << diag.assertions.size()
       << ")\n";
    for (const auto& a : diag.assertions) {
        if (!a.passed) os << "  iteration " << a.iteration << " " << a.name << ": " << a.detail << "\n";
    }
    if (cs.final_gap) os << "final gap: " << to_string(*cs.final_gap) << "\n";
    return os.str();
}

inline std::string cmd_render(const std::string& input, const RunConfig& cfg, std::ostream& warn) {
    return render_svg(simulate_scene(load_script(input, cfg, warn), cfg));
}

inline std::string scientific(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", to_double(r));
    return buf;
}

inline std::string complex_text(const ComplexRoot& z, int digits) {
    std::string im = to_decimal(abs(z.im), digits);
    return to_decimal(z.re, digits) + (sgn(z.im) < 0 ? " - " : " + ") + im + "i";
}

inline std::string cmd_solve(const std::string& polytext, const RunConfig& cfg) {
    const Poly p = parse_nonconstant(polytext);
    const RootReport report = solve_real(p, cfg.tolerance);
    std::optional<ComplexRootReport> complex;
    if (cfg.complex) complex = solve_complex(p, cfg.tolerance);
    const int digits = digits_for_tolerance(cfg.tolerance);

    if (cfg.format == OutputFormat::json) {
        nlohmann::json j;
        j["polynomial"] = format_poly(p);
        j["bound"] = to_string(report.bound);
        j["tolerance"] = to_string(report.tolerance);
        j["roots"] = nlohmann::json::array();
        for (const auto& r : report.roots) {
            j["roots"].push_back({{"value", to_string(r.value)},
                                  {"decimal", to_decimal(r.value, digits)},
                                  {"interval", {to_string(r.isolating.lo), to_string(r.isolating.hi)}},
                                  {"residual", to_string(r.residual)},
                                  {"certified", r.certified},
                                  {"multiplicity", r.multiplicity}});
        }
        if (complex) {
            j["q_re"] = format_poly(complex->reduction.q_re);
            j["q_im"] = format_poly(complex->reduction.q_im);
            j["complex_roots"] = nlohmann::json::array();
            for (const auto& z : complex->pairs) {
                j["complex_roots"].push_back({{"re", to_string(z.re)},
                                              {"im", to_string(z.im)},
                                              {"decimal", complex_text(z, digits)},
                                              {"residual", to_string(z.residual)}});
            }
        }
        return j.dump(2) + "\n";
    }
    if (cfg.format == OutputFormat::svg) throw Error("solve has no svg output", ExitCode::usage);

    std::ostringstream os;
    os << "polynomial: " << format_poly(p) << "\n";
    os << "bound: " << to_string(report.bound) << "\n";
    if (report.roots.empty()) {
        os << "no real roots\n";
    } else {
        os << report.roots.size() << (report.roots.size() == 1 ? " real root\n" : " real roots\n");
        for (const auto& r : report.roots) {
            os << "  x = " << to_decimal(r.value, digits) << "  in (" << to_string(r.isolating.lo) << ", "
               << to_string(r.isolating.hi) << "]  residual " << scientific(r.residual)
               << (r.certified ? "  certified" : "  UNCERTIFIED");
            if (r.multiplicity > 1) os << "  multiplicity " << r.multiplicity;
            os << "\n";
        }
    }
    if (complex) {
        os << "q_re: " << format_poly(complex->reduction.q_re) << "\n";
        os << "q_im: " << format_poly(complex->reduction.q_im) << "\n";
        os << complex->pairs.size() << " complex roots\n";
        for (const auto& z : complex->pairs) {
            os << "  z = " << complex_text(z, digits) << "  residual " << scientific(z.residual) << "\n";
        }
    }
    return os.str();
}

inline std::string cmd_reduce(const std::string& polytext, const RunConfig& cfg) {
    const Poly p = parse_nonconstant(polytext);
    const RealImagReduction r = reduce(p);
    if (cfg.format == OutputFormat::json) {
        nlohmann::json j{{"source", format_poly(r.source)}, {"q_re", format_poly(r.q_re)}, {"q_im", format_poly(r.q_im)}};
        return j.dump(2) + "\n";
    }
    if (cfg.format == OutputFormat::svg) throw Error("reduce has no svg output", ExitCode::usage);
    return "source: " + format_poly(r.source) + "\nq_re: " + format_poly(r.q_re) + "\nq_im: " + format_poly(r.q_im) +
           "\n";
}

inline std::string cmd_bound(const std::string& polytext, const RunConfig& cfg, std::ostream& warn) {
    const Poly p = parse_nonconstant(polytext);
    const Rational cauchy = cauchy_root_bound(p);
    const FoldScript script = compile(p, resolve_bound(p, cfg.bound, warn));
    const Extents ext = paper_extents(script, script.bound());
    const Rational strip = total_strip_length(script, ext);
    if (cfg.format == OutputFormat::json) {
        nlohmann::json j{{"polynomial", format_poly(p)},
                         {"cauchy_bound", to_string(cauchy)},
                         {"bound", to_string(script.bound())},
                         {"extents", {{"width", to_string(ext.width)}, {"height", to_string(ext.height)}}},
                         {"total_strip_length", to_string(strip)}};
        return j.dump(2) + "\n";
    }
    if (cfg.format == OutputFormat::svg) throw Error("bound has no svg output", ExitCode::usage);
    return "cauchy bound: " + to_string(cauchy) + "\nbound: " + to_string(script.bound()) + "\nextents: width " +
           to_string(ext.width) + ", height " + to_string(ext.height) + "\ntotal strip length: " + to_string(strip) +
           "\n";
}

/// Runs `body`, printing its result to `out` (or to `out_path` when given).
/// Errors go to `err`; the return value is the process exit code.
template <class Body>
int guarded(Body&& body, std::ostream& out, std::ostream& err, const std::string& out_path = {}) {
    try {
        std::string text = body();
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(out_path);
            if (!file) throw Error("cannot write " + out_path, ExitCode::usage);
            file << text;
        }
        return static_cast<int>(ExitCode::ok);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::internal);
    }
}

}  // namespace multifold::cli
