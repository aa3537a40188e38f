#include "topo2d/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "topo2d/config_spec.hpp"
#include "topo2d/enumeration.hpp"
#include "topo2d/pbm.hpp"
#include "topo2d/simplicity.hpp"
#include "topo2d/thinning.hpp"
#include "topo2d/topo_numbers.hpp"

namespace topo2d {
namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

PbmVariant parse_variant(const std::string& s) { return s == "p4" ? PbmVariant::P4 : PbmVariant::P1; }

struct Options {
    // enumerate
    std::string csv_dir;
    // check
    std::string config;
    int n = 0;
    // verify
    int canvas = 5;
    int random_images = 0;
    std::string size = "16x16";
    std::uint64_t seed = 1;
    // analyze / thin
    std::string input;
    std::string output;
    std::string format = "p1";
    bool endpoints = false;
    bool reverse = false;
};

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> deviations;
    for (const CountTable& table : count_tables()) {
        out << format_table_text(table) << '\n';
        for (auto& d : table_deviations(table)) deviations.push_back(table.name + ": " + d);
        if (!opt.csv_dir.empty()) {
            std::filesystem::create_directories(opt.csv_dir);
            const auto path = std::filesystem::path(opt.csv_dir) / (table.name + ".csv");
            std::ofstream f(path);
            f << format_table_csv(table);
            if (!f) {
                err << "error: cannot write " << path.string() << '\n';
                return 1;
            }
        }
    }
    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        const DeletabilityRate simple = deletability_rate(n);
        const DeletabilityRate rest = non_simple_rate(n);
        out << to_int(n) << "-simple configurations: " << simple.count << "/" << simple.total
            << " = " << simple.percent_text() << "%; non-simple: " << rest.count << "/" << rest.total
            << " = " << rest.percent_text() << "%\n";
        if (simple.count != 116) {
            deviations.push_back(std::to_string(to_int(n)) + "-simple count " +
                                 std::to_string(simple.count) + ", expected 116");
        }
    }
    for (const auto& d : deviations) err << "deviation: " << d << '\n';
    return deviations.empty() ? 0 : 1;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
    NeighborhoodConfig c;
    try {
        c = parse_config(opt.config);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    out << "mask: " << static_cast<int>(c.mask) << "  bits (E NE N NW W SW S SE): "
        << to_bit_string(c) << '\n'
        << to_glyphs(c) << '\n'
        << "T4(x,X) = " << topological_number(c, Adjacency::Four) << '\n'
        << "T8(x,X) = " << topological_number(c, Adjacency::Eight) << '\n'
        << "T4(x,Xbar) = " << topological_number_complement(c, Adjacency::Four) << '\n'
        << "T8(x,Xbar) = " << topological_number_complement(c, Adjacency::Eight) << '\n'
        << "H(x,X) = " << hilditch(c) << '\n'
        << "Y4(x,X) = " << yokoi(c, Adjacency::Four) << '\n'
        << "Y8(x,X) = " << yokoi(c, Adjacency::Eight) << '\n'
        << "4-interior: " << yes_no(is_interior(c, Adjacency::Four))
        << ", 8-interior: " << yes_no(is_interior(c, Adjacency::Eight)) << '\n'
        << "4-isolated: " << yes_no(is_isolated(c, Adjacency::Four))
        << ", 8-isolated: " << yes_no(is_isolated(c, Adjacency::Eight)) << '\n';

    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        if (opt.n != 0 && to_int(n) != opt.n) continue;
        out << "n=" << to_int(n) << ':';
        for (Characterization m : {Characterization::TwoTopoNumbers, Characterization::TopoNumberPlusInterior,
                                   Characterization::Hilditch, Characterization::Yokoi,
                                   Characterization::Oracle}) {
            if (m == Characterization::Hilditch && n == Adjacency::Four) continue;
            out << ' ' << to_string(m) << '=' << yes_no(is_simple(c, n, m));
        }
        out << '\n';
    }
    out << "4-simple: " << yes_no(simplicity_lut(Adjacency::Four)[c])
        << ", 8-simple: " << yes_no(simplicity_lut(Adjacency::Eight)[c]) << '\n';
    return 0;
}

bool parse_size(const std::string& s, int& w, int& h) {
    const auto x = s.find('x');
    if (x == std::string::npos) return false;
    try {
        std::size_t used = 0;
        w = std::stoi(s.substr(0, x), &used);
        if (used != x) return false;
        h = std::stoi(s.substr(x + 1), &used);
        if (used != s.size() - x - 1) return false;
    } catch (const std::exception&) {
        return false;
    }
    return w > 0 && h > 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    int w = 0;
    int h = 0;
    if (!parse_size(opt.size, w, h)) {
        err << "error: --size must look like WxH, got '" << opt.size << "'\n";
        return 2;
    }
    bool ok = true;

    const EquivalenceReport eq = equivalence_report(opt.canvas);
    out << "exhaustive characterization checks (oracle canvas " << opt.canvas << "x" << opt.canvas
        << "):\n"
        << eq.to_text();
    ok = ok && eq.passed();

    const EquivalenceReport dual = duality_check();
    out << "duality checks:\n" << dual.to_text();
    ok = ok && dual.passed();

    for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
        const SimplicityLut oracle = build_oracle_lut(n, opt.canvas);
        const SimplicityLut& lut = simplicity_lut(n);
        std::vector<int> bad;
        for (NeighborhoodConfig c : all_configs()) {
            if (lut[c] != oracle[c]) bad.push_back(c.mask);
        }
        out << (bad.empty() ? "PASS " : "FAIL ") << "production_lut_vs_oracle_n" << to_int(n)
            << ": " << lut.popcount() << " simple masks, hex " << lut.to_hex() << '\n';
        if (!bad.empty()) {
            out << "     counterexample masks:";
            for (int m : bad) out << ' ' << m;
            out << '\n';
            ok = false;
        }
    }

    if (opt.random_images > 0) {
        std::mt19937_64 rng(opt.seed);
        long long pixels = 0;
        long long mismatches = 0;
        for (int i = 0; i < opt.random_images; ++i) {
            const BinaryImage img = random_image(w, h, rng);
            pixels += static_cast<long long>(img.black_count());
            for (Adjacency n : {Adjacency::Four, Adjacency::Eight}) {
                for (PixelCoord p : locality_mismatches(img, n)) {
                    ++mismatches;
                    out << "     locality mismatch: image " << i << " pixel (" << p.col << ","
                        << p.row << ") n=" << to_int(n) << " mask "
                        << static_cast<int>(extract_config(img, p).mask) << '\n';
                }
            }
        }
        out << (mismatches == 0 ? "PASS " : "FAIL ") << "locality: " << opt.random_images
            << " random " << w << "x" << h << " images (seed " << opt.seed << "), " << pixels
            << " black pixels x 2 adjacencies, " << mismatches << " mismatches\n";
        ok = ok && mismatches == 0;
    }

    out << (ok ? "verification passed" : "verification FAILED") << '\n';
    return ok ? 0 : 1;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
    const BinaryImage img = read_pbm_file(opt.input);
    const Adjacency n = adjacency_from_int(opt.n);
    BinaryImage map(img.width(), img.height());
    std::size_t simple = 0;
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            if (img.is_black({c, r}) && image_is_simple(img, {c, r}, n)) {
                map.set({c, r}, Color::Black);
                ++simple;
            }
        }
    }
    out << "image: " << img.width() << "x" << img.height() << ", black pixels: " << img.black_count()
        << ", " << to_int(n) << "-simple: " << simple << '\n';
    if (!opt.output.empty()) {
        write_pbm_file(opt.output, map, parse_variant(opt.format));
        out << "simple-point map written to " << opt.output << '\n';
    }
    (void)err;
    return 0;
}

int cmd_thin(const Options& opt, std::ostream& out, std::ostream& err) {
    const BinaryImage img = read_pbm_file(opt.input);
    ThinningPolicy policy;
    policy.n = adjacency_from_int(opt.n);
    policy.preserve_endpoints = opt.endpoints;
    policy.scan_order = opt.reverse ? ScanOrder::ReverseRaster : ScanOrder::Raster;
    const auto [result, report] = thin(img, policy);
    out << "iterations: " << report.iterations << '\n'
        << "deleted: " << report.deleted << '\n'
        << "remaining black pixels: " << result.black_count() << '\n'
        << "black " << to_int(policy.n) << "-components: " << report.black_components_before
        << " -> " << report.black_components_after << '\n'
        << "white " << to_int(opposite(policy.n)) << "-components: " << report.white_components_before
        << " -> " << report.white_components_after << '\n'
        << "topology preserved: " << yes_no(report.topology_preserved()) << '\n';
    if (!opt.output.empty()) {
        write_pbm_file(opt.output, result, parse_variant(opt.format));
        out << "thinned image written to " << opt.output << '\n';
    }
    if (!report.topology_preserved()) {
        err << "error: thinning audit failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Digital topology toolkit: topological numbers, simple points and thinning", "topo2d"};
    app.require_subcommand(1);
    Options opt;

    auto* enumerate = app.add_subcommand("enumerate", "Reproduce the 256-configuration count tables");
    enumerate->add_option("--csv", opt.csv_dir, "Also write one CSV per table into DIR");

    auto* check = app.add_subcommand(
        "check",
        "Show every metric and characterization of one configuration.\n"
        "CONFIG is a mask 0-255, eight 0/1 digits in E,NE,N,NW,W,SW,S,SE order,\n"
        "or a 3x3 block of '#' (black) and '.' (white) with 'x' at the center,\n"
        "rows top to bottom separated by '/' or newlines, e.g. '#.#/#x#/###'");
    check->add_option("config", opt.config, "Configuration")->required();
    check->add_option("--n", opt.n, "Restrict the characterization lines to n")->check(CLI::IsMember({4, 8}));

    auto* verify = app.add_subcommand(
        "verify",
        "Exhaustive oracle checks plus random-image locality checks.\n"
        "Random images use std::mt19937_64 seeded with --seed; each pixel is black\n"
        "with probability 1/2, one generator bit per pixel in raster order");
    verify->add_option("--canvas", opt.canvas, "Oracle canvas side")->check(CLI::IsMember({5, 7}));
    verify->add_option("--random", opt.random_images, "Number of random images")->check(CLI::NonNegativeNumber);
    verify->add_option("--size", opt.size, "Random image size WxH");
    verify->add_option("--seed", opt.seed, "Random seed");

    auto* analyze = app.add_subcommand("analyze", "Mark the simple points of a PBM image");
    analyze->add_option("input", opt.input, "Input PBM")->required();
    analyze->add_option("--n", opt.n, "Object adjacency")->required()->check(CLI::IsMember({4, 8}));
    analyze->add_option("--out", opt.output, "Write the simple-point map here");
    analyze->add_option("--format", opt.format, "Output PBM variant")->check(CLI::IsMember({"p1", "p4"}));

    auto* thin_cmd = app.add_subcommand("thin", "Sequential topology-preserving thinning of a PBM image");
    thin_cmd->add_option("input", opt.input, "Input PBM")->required();
    thin_cmd->add_option("--n", opt.n, "Object adjacency")->required()->check(CLI::IsMember({4, 8}));
    thin_cmd->add_flag("--endpoints", opt.endpoints, "Keep pixels with exactly one black neighbor");
    thin_cmd->add_flag("--reverse", opt.reverse, "Scan in reverse raster order");
    thin_cmd->add_option("--out", opt.output, "Write the thinned image here");
    thin_cmd->add_option("--format", opt.format, "Output PBM variant")->check(CLI::IsMember({"p1", "p4"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt, out, err);
        if (check->parsed()) return cmd_check(opt, out, err);
        if (verify->parsed()) return cmd_verify(opt, out, err);
        if (analyze->parsed()) return cmd_analyze(opt, out, err);
        if (thin_cmd->parsed()) return cmd_thin(opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace topo2d
