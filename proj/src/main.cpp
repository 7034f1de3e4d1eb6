// SPDX-License-Identifier: MIT
/**
    \file
    \brief Command-line front end: analyze, trace, portrait, atlas, recover,
           and verify subcommands over flat-file JSON/CSV/SVG artifacts

    Exit codes: 0 ok, 1 usage or I/O error, 2 verification failure,
    3 non-generic input (rejected surface or unrecoverable invariants).
*/

#include <p3c/report.hpp>
#include <p3c/svg.hpp>
#include <p3c/verify.hpp>

#include "CLI11.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;
constexpr int exit_non_generic = 3;

auto read_text(std::string const& path) -> std::string
{
    if (path == "-") {
        auto stream = std::ostringstream{};
        stream << std::cin.rdbuf();
        return stream.str();
    }
    auto stream = std::ifstream{path};
    if (!stream) { throw std::runtime_error{"cannot open input file: " + path}; }
    auto buffer = std::ostringstream{};
    buffer << stream.rdbuf();
    return buffer.str();
}

auto write_text(std::string const& path, std::string const& text) -> void
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    auto stream = std::ofstream{path};
    if (!stream) { throw std::runtime_error{"cannot open output file: " + path}; }
    stream << text;
}

auto load_surface(std::string const& path) -> p3c::surface_input_t
{
    return p3c::surface_from_json(p3c::json_t::parse(read_text(path)));
}

/// float mode keeps the report schema and converts "p/q" scalars to numbers
auto float_mode(p3c::json_t node) -> p3c::json_t
{
    if (node.is_object() || node.is_array()) {
        for (auto& child : node) { child = float_mode(child); }
        return node;
    }
    if (node.is_string()) {
        static auto const rational_shape = std::regex{R"(^-?\d+(/\d+)?$)"};
        if (std::regex_match(node.get_ref<std::string const&>(), rational_shape)) {
            return p3c::json_t(p3c::to_double(p3c::parse_rational(node)));
        }
    }
    return node;
}

/// "p/q", integer, or decimal text to an exact rational
auto parse_ratio_text(std::string const& text) -> p3c::rational_t
{
    try {
        return p3c::parse_rational(p3c::json_t(text));
    } catch (std::invalid_argument const&) {
        auto consumed = std::size_t{0};
        auto const value = std::stod(text, &consumed);
        if (consumed != text.size()) { throw; }
        return p3c::rational_from_double(value);
    }
}

/// swap or append an extension, for the atlas CSV/SVG sibling pair
auto with_extension(std::string const& path, std::string const& extension) -> std::string
{
    auto const dot = path.rfind('.');
    auto const slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) { return path + extension; }
    return path.substr(0, dot) + extension;
}

}  // namespace

auto main(int argc, char** argv) -> int
{
    auto app = CLI::App{"exact invariants, recovery, and phase portraits for singular surface projections"};
    app.require_subcommand(1);

    auto input_path = std::string{};
    auto output_path = std::string{};
    auto mode = std::string{"exact"};
    auto tolerance = 1e-9;
    auto grid = 100;
    auto box = 0.0;  // per-subcommand default resolved below
    auto step = 1e-3;
    auto seed = p3c::default_verify_seed;
    auto paper_literal = false;
    auto rho_text = std::array<std::string, 4>{};

    auto const add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "exact (rationals as \"p/q\") or float output")
            ->check(CLI::IsMember({"exact", "float"}));
    };

    auto* analyze = app.add_subcommand("analyze", "full JSON report for one surface");
    analyze->add_option("--input", input_path, "surface JSON ({\"alpha\",\"beta\"} or {\"a\",\"b\"} tables; - for stdin)")
        ->required();
    analyze->add_option("--output", output_path, "report path (default stdout)");
    add_mode(analyze);
    analyze->add_option("--tol", tolerance, "degeneracy tolerance")->check(CLI::PositiveNumber);
    analyze->add_flag("--paper-literal", paper_literal,
                      "also evaluate the historical reference expansions for comparison");

    auto* trace = app.add_subcommand("trace", "CSV of oracle samples vs closed forms for all seven loci");
    trace->add_option("--input", input_path, "surface JSON (- for stdin)")->required();
    trace->add_option("--output", output_path, "CSV path (default stdout)");
    trace->add_option("--grid", grid, "samples per side of the window")->check(CLI::PositiveNumber);
    trace->add_option("--box", box, "traced window half-width in y (default 0.05)")->check(CLI::PositiveNumber);

    auto* portrait = app.add_subcommand("portrait", "SVG phase portrait of the asymptotic direction fields");
    portrait->add_option("--input", input_path, "surface JSON (- for stdin)")->required();
    portrait->add_option("--output", output_path, "SVG path (default stdout)");
    portrait->add_option("--box", box, "portrait half-width (default 0.3)")->check(CLI::PositiveNumber);
    portrait->add_option("--step", step, "integrator step")->check(CLI::PositiveNumber);

    auto* atlas = app.add_subcommand("atlas", "CSV and SVG of the moduli-plane region structure");
    atlas->add_option("--grid", grid, "cells per side")->check(CLI::PositiveNumber);
    atlas->add_option("--output", output_path, "CSV path (default atlas.csv; SVG lands beside it)");
    atlas->add_option("--tol", tolerance, "degeneracy tolerance")->check(CLI::PositiveNumber);

    auto* recover = app.add_subcommand("recover", "moduli from user-supplied cross-ratio invariants");
    recover->add_option("--rho1", rho_text[0], "first invariant (\"p/q\" or decimal)")->required();
    recover->add_option("--rho2", rho_text[1], "second invariant")->required();
    recover->add_option("--rho3", rho_text[2], "third invariant")->required();
    recover->add_option("--rho4", rho_text[3], "quartic invariant (required on the degenerate branch)");
    recover->add_option("--output", output_path, "JSON path (default stdout)");
    add_mode(recover);

    auto* verify = app.add_subcommand("verify", "run the release criteria; nonzero exit on unexpected failure");
    add_mode(verify);
    verify->add_option("--seed", seed, "seed for the randomized suites (deterministic per seed)");
    verify->add_option("--output", output_path, "also write the textual report here");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& error) {
        auto const code = app.exit(error);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) {
            auto options = p3c::analyze_options_t{};
            options.paper_literal = paper_literal;
            options.tolerance = tolerance;
            auto const input = load_surface(input_path);
            auto report = p3c::analyze_report(input.surface, options);
            if (mode == "float") { report = float_mode(report); }
            write_text(output_path, report.dump(2) + "\n");
            return report.contains("error") ? exit_non_generic : exit_ok;
        }

        if (*trace) {
            auto const input = load_surface(input_path);
            auto const gate = p3c::detect_p3c(input.surface);
            if (!gate.is_p3c) {
                std::cerr << "not a P3(c) point: " << gate.failing_condition << "\n";
                return exit_non_generic;
            }
            if (!gate.versal) {
                std::cerr << "non-versal: oracle tracing disabled\n";
                return exit_non_generic;
            }
            auto const y_range = box > 0.0 ? box : 0.05;
            write_text(output_path, p3c::trace_csv(input.surface, y_range, grid));
            return exit_ok;
        }

        if (*portrait) {
            auto const input = load_surface(input_path);
            auto const eq = p3c::bde_t<double>::from_surface(p3c::to_double_surface(input.surface));
            write_text(output_path, p3c::portrait_svg(eq, box > 0.0 ? box : 0.3, step));
            return exit_ok;
        }

        if (*atlas) {
            auto const cells = p3c::sample_atlas(grid, -2.0, 2.0, -2.0, 2.0, tolerance);
            auto const csv_path = output_path.empty() ? std::string{"atlas.csv"} : output_path;
            write_text(csv_path, p3c::atlas_csv(cells));
            if (csv_path != "-") {
                auto const svg_path = with_extension(csv_path, ".svg");
                write_text(svg_path, p3c::atlas_svg(cells, grid));
                std::cerr << "wrote " << csv_path << " and " << svg_path << "\n";
            }
            return exit_ok;
        }

        if (*recover) {
            auto quartic = std::optional<p3c::rational_t>{};
            if (!rho_text[3].empty()) { quartic = parse_ratio_text(rho_text[3]); }
            try {
                auto const recovered = p3c::recover_moduli(parse_ratio_text(rho_text[0]),
                                                           parse_ratio_text(rho_text[1]),
                                                           parse_ratio_text(rho_text[2]), quartic);
                auto report = p3c::json_t{{"alpha", p3c::json_scalar(recovered.alpha)},
                                          {"beta", p3c::json_scalar(recovered.beta)},
                                          {"degenerate_branch", recovered.degenerate_branch},
                                          {"exact", recovered.exact}};
                if (mode == "float") { report = float_mode(report); }
                write_text(output_path, report.dump(2) + "\n");
                return exit_ok;
            } catch (p3c::invalid_moduli_error const& error) {
                std::cerr << error.what() << "\n";
                return exit_non_generic;
            }
        }

        if (*verify) {
            if (mode != "exact") {
                std::cerr << "verify: the identity checks require --mode exact\n";
                return exit_usage;
            }
            auto const results = p3c::run_all_criteria(seed);
            auto text = std::ostringstream{};
            for (auto const& result : results) {
                text << p3c::format_criterion_line(result) << "\n";
                if (!result.pass) {
                    for (auto const& line : result.details) { text << "    " << line << "\n"; }
                }
            }
            auto const [unexpected, documented] = p3c::failure_counts(results);
            text << "unexpected failures: " << unexpected << "; documented failures: " << documented << "\n";
            std::cout << text.str();
            if (!output_path.empty() && output_path != "-") { write_text(output_path, text.str()); }
            return unexpected == 0 ? exit_ok : exit_verification;
        }
    } catch (p3c::invalid_moduli_error const& error) {
        std::cerr << error.what() << "\n";
        return exit_non_generic;
    } catch (p3c::non_generic_error const& error) {
        std::cerr << error.what() << "\n";
        return exit_non_generic;
    } catch (p3c::chart_error const& error) {
        std::cerr << error.what() << "\n";
        return exit_non_generic;
    } catch (std::exception const& error) {
        std::cerr << error.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
