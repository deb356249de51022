#pragma once

// Command-line front end. Exit codes: 0 success or pass, 1 verification
// failure or not-found, 2 usage, parse, or I/O error. Reports go to `out`,
// diagnostics to `err`.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "errors.hpp"
#include "poset.hpp"
#include "poset_io.hpp"
#include "rank_polynomial.hpp"
#include "render.hpp"
#include "scd.hpp"
#include "scd_io.hpp"

namespace youngscd::cli {

enum Exit : int { ok = 0, failed = 1, usage = 2 };

namespace detail {

// Thrown for bad input files; carries the file name for the diagnostic.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class Fn>
auto parse_file(const std::string& path, Fn fn) {
    const std::string text = slurp(path);
    try {
        return fn(text);
    } catch (const parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

// Writes to --out if given, otherwise to `out`.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw input_error(path + ": cannot write");
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Young lattices, rank polynomials and symmetric chain decompositions", "youngscd"};
    app.require_subcommand(1);

    int m = 0, n = 0;
    std::string out_path;

    auto* lattice = app.add_subcommand("lattice", "Write the poset file of L(M,N)");
    std::string coords = "composition";
    lattice->add_option("M", m, "Maximum number of parts")->required()->check(CLI::NonNegativeNumber);
    lattice->add_option("N", n, "Maximum part size")->required()->check(CLI::NonNegativeNumber);
    lattice->add_option("--coords", coords, "Construction coordinates")
        ->check(CLI::IsMember({"partition", "composition"}));
    lattice->add_option("--out", out_path, "Output file");

    auto* ranks = app.add_subcommand("ranks", "Gaussian binomial coefficients, one per line");
    ranks->add_option("M", m)->required()->check(CLI::NonNegativeNumber);
    ranks->add_option("N", n)->required()->check(CLI::NonNegativeNumber);

    auto* identities = app.add_subcommand("identities", "Check both Pascal recurrences for [M+N choose M]_q");
    identities->add_option("M", m)->required()->check(CLI::PositiveNumber);
    identities->add_option("N", n)->required()->check(CLI::PositiveNumber);

    auto* scd = app.add_subcommand("scd", "Symmetric chain decompositions");
    scd->require_subcommand(1);
    auto* lind = scd->add_subcommand("lindstrom", "Lindström's decomposition of L'(M,3)");
    lind->add_option("M", m)->required()->check(CLI::PositiveNumber);
    lind->add_option("--out", out_path);
    auto* n2 = scd->add_subcommand("n2", "Alternating decomposition of L(M,2)");
    n2->add_option("M", m)->required()->check(CLI::PositiveNumber);
    n2->add_option("--out", out_path);
    auto* brute = scd->add_subcommand("brute", "Backtracking search on L'(M,N)");
    std::uint64_t budget = default_search_budget;
    brute->add_option("M", m)->required()->check(CLI::NonNegativeNumber);
    brute->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
    brute->add_option("--budget", budget, "Maximum search nodes");
    brute->add_option("--out", out_path);
    auto* verify = scd->add_subcommand("verify", "Check a decomposition file against a poset file");
    std::string poset_file, scd_file;
    verify->add_option("POSET_FILE", poset_file)->required();
    verify->add_option("SCD_FILE", scd_file)->required();

    auto* render = app.add_subcommand("render", "Draw a poset file as DOT or SVG");
    std::string format = "dot", labels = "partition";
    int max_height = RenderSpec{}.max_height;
    render->add_option("POSET_FILE", poset_file)->required();
    render->add_option("--scd", scd_file, "Decomposition to highlight");
    render->add_option("--format", format)->check(CLI::IsMember({"dot", "svg"}));
    render->add_option("--labels", labels)->check(CLI::IsMember({"partition", "composition", "young"}));
    render->add_option("--max-height", max_height, "SVG height limit")->check(CLI::NonNegativeNumber);
    render->add_option("--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*lattice) {
            const auto mode = coords == "partition" ? Coordinates::partition : Coordinates::composition;
            detail::emit(to_text(build_lattice(Shape(m, n), mode)), out_path, out);
            return ok;
        }
        if (*ranks) {
            const RankPolynomial g = gaussian_binomial(m, n);
            for (const auto& c : g.coefficients())
                out << c << '\n';
            return ok;
        }
        if (*identities) {
            const SplittingReport r = check_splitting_identities(m, n);
            auto pf = [](bool b) { return b ? "pass" : "fail"; };
            out << "largest-part identity: " << pf(r.largest_part_identity) << '\n';
            out << "part-count identity: " << pf(r.part_count_identity) << '\n';
            out << "with a part of size " << n << ": " << r.with_largest_part << '\n';
            out << "without a part of size " << n << ": " << r.without_largest_part << '\n';
            out << "largest-part bijection: " << pf(r.largest_part_bijection) << '\n';
            out << "with " << m << " parts: " << r.with_m_parts << '\n';
            out << "fewer parts: " << r.fewer_parts << '\n';
            out << "part-count bijection: " << pf(r.part_count_bijection) << '\n';
            out << "verdict: " << pf(r.ok()) << '\n';
            return r.ok() ? ok : failed;
        }
        if (*lind) {
            detail::emit(to_text(lindstrom(m)), out_path, out);
            return ok;
        }
        if (*n2) {
            detail::emit(to_text(scd_n2(m)), out_path, out);
            return ok;
        }
        if (*brute) {
            const GradedPoset p = build_lattice(Shape(m, n));
            const BruteForceResult r = brute_force_scd(p, budget);
            if (r.status != BruteForceResult::Status::found) {
                out << to_string(r.status) << ": L'(" << m << ',' << n << ") after " << r.nodes << " nodes\n";
                return failed;
            }
            detail::emit(to_text(*r.decomposition), out_path, out);
            return ok;
        }
        if (*verify) {
            const GradedPoset p = detail::parse_file(poset_file, poset_from_text);
            const ChainDecomposition d = detail::parse_file(scd_file, decomposition_from_text);
            const VerifyReport r = verify_scd(d, p);
            out << r.to_text();
            return r.passed() ? ok : failed;
        }
        if (*render) {
            const GradedPoset p = detail::parse_file(poset_file, poset_from_text);
            RenderSpec spec;
            spec.labels = labels == "young"         ? LabelMode::young
                          : labels == "composition" ? LabelMode::composition
                                                    : LabelMode::partition;
            spec.max_height = max_height;
            if (!scd_file.empty())
                spec.highlight = detail::parse_file(scd_file, decomposition_from_text);
            try {
                detail::emit(format == "svg" ? to_svg(p, spec) : to_dot(p, spec), out_path, out);
            } catch (const unknown_element& e) {
                err << "youngscd: highlighted decomposition does not match the poset: " << e.what() << '\n';
                return failed;
            }
            return ok;
        }
    } catch (const std::exception& e) {
        // Unreadable input, size limits, and bad files all land here.
        err << "youngscd: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace youngscd::cli
