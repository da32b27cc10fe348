#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "multifold/commands.hpp"

namespace mc = multifold::cli;

namespace {

struct Flags {
    std::string poly;
    std::optional<std::string> x;
    std::optional<std::string> tolerance;
    std::optional<std::string> bound;
    std::optional<std::string> format;
    std::string out;
    bool complex = false;
};

void add_common(CLI::App* cmd, Flags& f, const char* positional_help) {
    cmd->add_option("input", f.poly, positional_help)->required();
    cmd->add_option("--format", f.format, "Output format: text, json or svg");
    cmd->add_option("--out", f.out, "Write output to this file instead of stdout");
}

mc::RunConfig make_config(const Flags& f, mc::OutputFormat default_format) {
    mc::RunConfig cfg;
    cfg.format = f.format ? mc::parse_format(*f.format) : default_format;
    cfg.tolerance = mc::resolve_tolerance(f.tolerance);
    auto rational_flag = [](const std::string& name, const std::string& text) {
        try {
            return multifold::parse_rational(text);
        } catch (const multifold::ParseError& e) {
            throw multifold::Error("bad " + name + ": " + e.what(), multifold::ExitCode::usage);
        }
    };
    if (f.bound) cfg.bound = rational_flag("--bound", *f.bound);
    if (f.x) cfg.x = rational_flag("--x", *f.x);
    cfg.complex = f.complex;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compile polynomials into one-parameter fold scripts, simulate them, and solve the alignment"};
    app.require_subcommand(1);
    Flags f;

    auto* compile = app.add_subcommand("compile", "Compile a polynomial into a fold script");
    add_common(compile, f, "Polynomial, e.g. \"x^2 - 2\"");
    compile->add_option("--bound", f.bound, "Root bound to size the sheets (rational)");

    auto* simulate = app.add_subcommand("simulate", "Evaluate the construction at a value of x");
    add_common(simulate, f, "Fold script JSON file or polynomial text");
    simulate->add_option("--x", f.x, "Position of sheet x (rational)");
    simulate->add_option("--bound", f.bound, "Root bound to size the sheets (rational)");

    auto* render = app.add_subcommand("render", "Render the construction at x as SVG");
    add_common(render, f, "Fold script JSON file or polynomial text");
    render->add_option("--x", f.x, "Position of sheet x (rational)");
    render->add_option("--bound", f.bound, "Root bound to size the sheets (rational)");

    auto* solve = app.add_subcommand("solve", "Find the real roots by rolling to alignment");
    add_common(solve, f, "Polynomial text");
    solve->add_option("--tolerance", f.tolerance, "Width and residual tolerance (decimal)");
    solve->add_flag("--complex", f.complex, "Also recover complex roots through the real/imaginary reduction");

    auto* reduce = app.add_subcommand("reduce", "Polynomials for the real and imaginary parts of the roots");
    add_common(reduce, f, "Polynomial text");

    auto* bound = app.add_subcommand("bound", "Root bound, sheet extents and total strip length");
    add_common(bound, f, "Polynomial text");
    bound->add_option("--bound", f.bound, "Root bound override (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : static_cast<int>(multifold::ExitCode::usage);
    }

    return mc::guarded(
        [&]() -> std::string {
            if (compile->parsed()) return mc::cmd_compile(f.poly, make_config(f, mc::OutputFormat::json), std::cerr);
            if (simulate->parsed()) return mc::cmd_simulate(f.poly, make_config(f, mc::OutputFormat::text), std::cerr);
            if (render->parsed()) return mc::cmd_render(f.poly, make_config(f, mc::OutputFormat::svg), std::cerr);
            if (solve->parsed()) return mc::cmd_solve(f.poly, make_config(f, mc::OutputFormat::text));
            if (reduce->parsed()) return mc::cmd_reduce(f.poly, make_config(f, mc::OutputFormat::text));
            return mc::cmd_bound(f.poly, make_config(f, mc::OutputFormat::text), std::cerr);
        },
        std::cout, std::cerr, f.out);
}
