#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subdiv/analysis.hpp"
#include "subdiv/catalog.hpp"
#include "subdiv/conversion.hpp"
#include "subdiv/io.hpp"
#include "subdiv/polygon.hpp"
#include "subdiv/svg.hpp"

namespace fs = std::filesystem;
using namespace subdiv;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitParity = 3;
constexpr int kExitOracleMismatch = 4;

// Builtin catalog plus any mask files from SUBDIV_CATALOG_DIR. Duplicate
// names are an error.
std::map<std::string, SubdivisionScheme> runtime_catalog() {
    std::map<std::string, SubdivisionScheme> cat = builtin_catalog();
    const char* dir = std::getenv("SUBDIV_CATALOG_DIR");
    if (!dir || !*dir) return cat;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        SubdivisionScheme s = read_mask_file(entry.path());
        if (!cat.emplace(s.name, s).second)
            throw ParseError("SUBDIV_CATALOG_DIR: duplicate scheme name '" + s.name + "' in " +
                             entry.path().string());
    }
    return cat;
}

SubdivisionScheme load_scheme(const std::string& name, const std::string& file) {
    if (!name.empty()) {
        auto cat = runtime_catalog();
        auto it = cat.find(name);
        if (it == cat.end()) throw UnknownScheme("unknown scheme '" + name + "'");
        return it->second;
    }
    return read_mask_file(file);
}

Polygon load_polygon(const std::string& file, std::optional<Topology> forced) {
    Polygon p = read_polygon_file(file);
    if (forced && *forced != p.topology()) return Polygon(*forced, p.points());
    return p;
}

int cmd_convert(const std::string& in, const std::string& out, const std::string& method,
                const std::string& format) {
    SubdivisionScheme binary = read_mask_file(in);
    std::optional<ConversionResult> theorem;
    std::optional<SubdivisionScheme> symbol;
    if (method == "theorem" || method == "both") theorem = convert(binary);
    if (method == "symbol" || method == "both") symbol = convert_via_symbol(binary);
    if (method == "both" && theorem->quaternary.mask != symbol->mask) {
        std::cerr << "oracle mismatch: explicit formulas and symbol product disagree for '"
                  << binary.name << "'\n";
        return kExitOracleMismatch;
    }
    const SubdivisionScheme& quaternary = theorem ? theorem->quaternary : *symbol;
    if (!out.empty()) write_mask_file(out, quaternary);
    if (format == "json") {
        nlohmann::json j;
        j["input"] = binary.name;
        j["method"] = method;
        if (theorem)
            j["result"] = to_json(*theorem);
        else
            j["result"]["mask"] = mask_to_json(quaternary);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quaternary scheme derived from '" << binary.name << "' (" << method
                  << ")\n"
                  << expand_rule_text(quaternary);
        if (theorem) {
            std::cout << "rule widths (phases -2,-1,0,1):";
            for (int w : theorem->rule_widths) std::cout << " " << w;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_refine(const SubdivisionScheme& scheme, const Polygon& polygon, int steps,
               const std::string& out) {
    RefinementTrace trace = refine(polygon, scheme, steps);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw std::runtime_error("cannot write " + out);
        os = &file;
    }
    write_polygon_csv(*os, trace.levels.back());
    if (steps >= 1)
        std::cerr << "displacement bound: " << displacement_bound(trace).to_string() << "\n";
    return 0;
}

int cmd_holder(const SubdivisionScheme& scheme, bool pair, int depth,
               const std::string& format) {
    if (pair) {
        RegularityPair p = regularity_pair_report(scheme);
        if (format == "json") {
            std::cout << to_json(p).dump(2) << "\n";
        } else {
            auto line = [](const RegularityReport& r) {
                std::cout << r.scheme_name << ": p=" << r.smoothing_order
                          << " xi=[" << format_real(r.xi_lower, 12) << ", "
                          << format_real(r.xi_upper, 12) << "]"
                          << " r=[" << format_real(r.r_lower, 12) << ", "
                          << format_real(r.r_upper, 12) << "]"
                          << " rMid=" << format_real(r.r_mid, 12);
                if (r.published) {
                    std::cout << " published=" << format_real(*r.published, 12)
                              << " delta=" << format_real(*r.published_delta, 12);
                    if (r.disagrees_with_published) std::cout << " [exact disagrees]";
                }
                std::cout << "\n";
            };
            line(p.binary);
            line(p.quaternary);
            std::cout << "rMid delta (binary - quaternary): "
                      << format_real(p.r_mid_delta, 12) << "\n";
        }
        return 0;
    }
    RegularityReport rep = holder_regularity(scheme, depth);
    if (format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << rep.scheme_name << ": arity " << rep.arity << ", smoothing order "
                  << rep.smoothing_order << "\n"
                  << "  remainder: " << rep.remainder.to_string() << "\n"
                  << "  xi in [" << format_real(rep.xi_lower, 12) << ", "
                  << format_real(rep.xi_upper, 12) << "], midpoint "
                  << format_real(rep.xi_mid, 12) << "\n"
                  << "  regularity in [" << format_real(rep.r_lower, 12) << ", "
                  << format_real(rep.r_upper, 12) << "], midpoint "
                  << format_real(rep.r_mid, 12) << "\n";
        if (rep.published) {
            std::cout << "  published value " << format_real(*rep.published, 12) << ", delta "
                      << format_real(*rep.published_delta, 12)
                      << (rep.disagrees_with_published ? " [exact disagrees beyond 1e-6]" : "")
                      << "\n";
        }
    }
    return 0;
}

int cmd_precision(const SubdivisionScheme& scheme, int max_degree, const std::string& format) {
    PrecisionReport rep = degree_of_precision(scheme, max_degree);
    if (format == "json") {
        nlohmann::json j = to_json(rep);
        j["scheme"] = scheme.name;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << scheme.name << ": degree of precision " << rep.degree_of_precision
                  << ", degree of generation " << rep.degree_of_generation;
        if (rep.parameter_shift)
            std::cout << ", parameter shift " << rep.parameter_shift->to_string();
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog(const std::string& format) {
    auto cat = runtime_catalog();
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& [name, s] : cat) arr.push_back(mask_to_json(s));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& [name, s] : cat) {
        std::cout << name << "  arity " << s.mask.arity() << "  width " << s.mask.width()
                  << "  support [" << s.mask.first_index() << ", " << s.mask.last_index()
                  << "]\n    " << s.provenance << "\n";
    }
    return 0;
}

int cmd_plot(const SubdivisionScheme& scheme, const Polygon& polygon, int steps,
             const std::string& out) {
    RefinementTrace trace = refine(polygon, scheme, steps);
    static const char* kPalette[] = {"red", "blue", "black", "darkgray", "lightgray"};
    SvgScene scene;
    for (std::size_t lv = 0; lv < trace.levels.size(); ++lv) {
        SvgStyle style;
        style.stroke = kPalette[std::min<std::size_t>(lv, 4)];
        style.stroke_width = lv == 0 ? 2.0 : 1.2;
        scene.add_polyline(trace.levels[lv], style);
    }
    std::ofstream file(out);
    if (!file) throw ParseError("cannot write " + out);
    scene.write(file);
    return 0;
}

struct VerifyCounts {
    int passed = 0;
    int failed = 0;
    void row(bool ok, const std::string& label, const std::string& detail = {}) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << label;
        if (!detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
        (ok ? passed : failed) += 1;
    }
};

int cmd_verify(const std::string& only) {
    VerifyCounts counts;
    const bool run_convert = only.empty() || only == "convert";
    const bool run_holder = only.empty() || only == "holder";
    const bool run_precision = only.empty() || only == "precision";

    if (run_convert) {
        for (const auto& pair : conversion_pairs()) {
            SubdivisionScheme binary = catalog_get(pair.binary);
            SubdivisionScheme expected = catalog_get(pair.quaternary);
            ConversionResult theorem = convert(binary);
            SubdivisionScheme symbol = convert_via_symbol(binary);
            bool exact = theorem.quaternary.mask == expected.mask;
            bool oracle = symbol.mask == theorem.quaternary.mask;
            counts.row(exact, "convert " + pair.binary + " -> " + pair.quaternary,
                       exact ? "exact" : "coefficients differ");
            counts.row(oracle, "oracle  " + pair.binary, oracle ? "exact" : "mismatch");
            bool conv = check_convergence_condition(binary).satisfied &&
                        check_convergence_condition(expected).satisfied;
            counts.row(conv, "coset sums " + pair.binary + " / " + pair.quaternary);
        }
    }
    if (run_precision) {
        for (const auto& name : catalog_names()) {
            auto expected = published_degrees(name);
            if (!expected) continue;
            PrecisionReport rep = degree_of_precision(catalog_get(name));
            bool ok = rep.degree_of_precision == expected->precision &&
                      rep.degree_of_generation == expected->generation;
            counts.row(ok, "degrees " + name,
                       "DoP/DoG " + std::to_string(rep.degree_of_precision) + "/" +
                           std::to_string(rep.degree_of_generation) + " expected " +
                           std::to_string(expected->precision) + "/" +
                           std::to_string(expected->generation));
        }
    }
    if (run_holder) {
        for (const auto& name : catalog_names()) {
            if (!published_regularity(name)) continue;
            RegularityReport rep = holder_regularity(catalog_get(name));
            bool sandwich = rep.r_lower <= rep.r_mid + 1e-12 && rep.r_mid <= rep.r_upper + 1e-12;
            // The remainder must not absorb another smoothing factor.
            bool maximal = !try_divide(rep.remainder, smoothing_factor(rep.arity)).has_value();
            bool close = std::abs(*rep.published_delta) <= 2e-2;
            std::string detail = "rMid " + format_real(rep.r_mid, 12) + " published " +
                                 format_real(*rep.published, 12) + " delta " +
                                 format_real(*rep.published_delta, 12) +
                                 (rep.disagrees_with_published ? " [beyond 1e-6]" : "");
            counts.row(sandwich && maximal && close, "holder  " + name, detail);
        }
    }
    std::cout << counts.passed << " passed, " << counts.failed << " failed\n";
    return counts.failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-to-quaternary subdivision scheme toolkit"};
    app.require_subcommand(1);

    std::string in_file, out_file, scheme_name, polygon_file;
    std::string method = "both", format = "text", only;
    int steps = 1, max_degree = 16, depth = 1;
    bool pair = false, force_closed = false, force_open = false;

    auto add_scheme_opts = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", scheme_name, "catalog scheme name");
        cmd->add_option("--in", in_file, "mask JSON file");
    };

    auto* convert_cmd = app.add_subcommand("convert", "derive the quaternary scheme");
    convert_cmd->add_option("--in", in_file, "binary mask JSON file")->required();
    convert_cmd->add_option("--out", out_file, "output mask JSON file");
    convert_cmd->add_option("--method", method, "theorem | symbol | both")
        ->check(CLI::IsMember({"theorem", "symbol", "both"}));
    convert_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* refine_cmd = app.add_subcommand("refine", "refine a control polygon");
    add_scheme_opts(refine_cmd);
    refine_cmd->add_option("--polygon", polygon_file, "polygon CSV file")->required();
    refine_cmd->add_option("--steps", steps, "refinement steps");
    refine_cmd->add_option("--out", out_file, "output CSV file");
    refine_cmd->add_flag("--closed", force_closed, "treat the polygon as closed");
    refine_cmd->add_flag("--open", force_open, "treat the polygon as open");

    auto* holder_cmd = app.add_subcommand("holder", "Hoelder regularity report");
    add_scheme_opts(holder_cmd);
    holder_cmd->add_flag("--pair", pair, "convert and report binary/quaternary pair");
    holder_cmd->add_option("--depth", depth, "JSR bound over matrix products of this length")
        ->check(CLI::Range(1, 4));
    holder_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* precision_cmd = app.add_subcommand("precision", "degree of precision/generation");
    add_scheme_opts(precision_cmd);
    precision_cmd->add_option("--max-degree", max_degree, "largest degree tested");
    precision_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in schemes");
    catalog_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the catalog regression");
    verify_cmd->add_option("--only", only, "convert | holder | precision")
        ->check(CLI::IsMember({"convert", "holder", "precision"}));

    auto* plot_cmd = app.add_subcommand("plot", "emit an SVG of refinement levels");
    add_scheme_opts(plot_cmd);
    plot_cmd->add_option("--polygon", polygon_file, "polygon CSV file")->required();
    plot_cmd->add_option("--steps", steps, "refinement steps");
    plot_cmd->add_option("--out", out_file, "output SVG file")->required();
    plot_cmd->add_flag("--closed", force_closed, "treat the polygon as closed");
    plot_cmd->add_flag("--open", force_open, "treat the polygon as open");

    CLI11_PARSE(app, argc, argv);

    std::optional<Topology> forced;
    if (force_closed && force_open) {
        std::cerr << "--closed and --open are mutually exclusive\n";
        return kExitParse;
    }
    if (force_closed) forced = Topology::closed;
    if (force_open) forced = Topology::open;

    try {
        if (convert_cmd->parsed()) return cmd_convert(in_file, out_file, method, format);
        if (refine_cmd->parsed()) {
            if (scheme_name.empty() && in_file.empty())
                throw ParseError("refine: provide --scheme or --in");
            return cmd_refine(load_scheme(scheme_name, in_file),
                              load_polygon(polygon_file, forced), steps, out_file);
        }
        if (holder_cmd->parsed()) {
            if (scheme_name.empty() && in_file.empty())
                throw ParseError("holder: provide --scheme or --in");
            return cmd_holder(load_scheme(scheme_name, in_file), pair, depth, format);
        }
        if (precision_cmd->parsed()) {
            if (scheme_name.empty() && in_file.empty())
                throw ParseError("precision: provide --scheme or --in");
            return cmd_precision(load_scheme(scheme_name, in_file), max_degree, format);
        }
        if (catalog_cmd->parsed()) return cmd_catalog(format);
        if (verify_cmd->parsed()) return cmd_verify(only);
        if (plot_cmd->parsed()) {
            if (scheme_name.empty() && in_file.empty())
                throw ParseError("plot: provide --scheme or --in");
            return cmd_plot(load_scheme(scheme_name, in_file),
                            load_polygon(polygon_file, forced), steps, out_file);
        }
    } catch (const WrongArity& e) {
        std::cerr << e.what() << "\n";
        return kExitParity;
    } catch (const WrongParity& e) {
        std::cerr << e.what() << "\n";
        return kExitParity;
    } catch (const NotDualLayout& e) {
        std::cerr << e.what() << "\n";
        return kExitParity;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownScheme& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const TooFewPoints& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
