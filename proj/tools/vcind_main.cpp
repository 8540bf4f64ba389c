#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vcind/density.hpp"
#include "vcind/rank.hpp"
#include "vcind/scheme.hpp"
#include "vcind/vctm.hpp"
#include "vcind/witness.hpp"
#include "vcind/zoo.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailedExpectation = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot open " + output_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

vcind::FamilySpec resolve_spec(const std::string& family, std::int64_t n,
                               std::uint64_t seed) {
    std::string text = family;
    if (n >= 0 && family.find(':') == std::string::npos &&
        family.find('(') == std::string::npos) {
        text += ":" + std::to_string(n);
    }
    vcind::FamilySpec spec = vcind::FamilySpec::parse(text);
    spec.seed = seed;
    return spec;
}

std::vector<std::size_t> parse_grid(const std::string& csv) {
    std::vector<std::size_t> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        grid.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    return grid;
}

ordered_json cuts_to_json(const vcind::CutSet& cuts) {
    ordered_json arr = ordered_json::array();
    for (std::size_t g : cuts.gaps) {
        arr.push_back(static_cast<double>(g) + 0.5);
    }
    return arr;
}

ordered_json estimate_to_json(const vcind::DensityEstimate& est) {
    ordered_json j;
    j["exponent"] = est.exponent;
    j["constant_K"] = est.constant_k;
    j["grid"] = ordered_json::array();
    for (const auto& [w, c] : est.grid) {
        j["grid"].push_back({{"N", w}, {"count", c}});
    }
    j["residual"] = est.residual;
    j["nearest_integer"] = est.nearest_integer;
    j["integrality_gap"] = est.integrality_gap;
    j["verdict"] = est.verdict_string();
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Finite trace-matrix combinatorics: family generators, "
                 "alternation and switch ranks, defining-scheme certificates, "
                 "and growth-exponent fits"};
    app.require_subcommand(1);

    std::string family;
    std::int64_t n_param = -1;
    std::size_t width = 16;
    std::size_t window = 0;
    std::vector<std::size_t> windows;
    std::uint64_t seed = 0;
    std::string input_path;
    std::string output_path;
    std::string csv_path;
    std::string grid_csv;
    std::string rank_widths_csv = "16,20,24";
    std::int64_t expect = -1;
    std::size_t rank_n = 0;
    bool dedup = false;

    auto* gen = app.add_subcommand("generate", "emit a zoo family as vctm");
    gen->add_option("--family", family, "family kind or compact spec")
        ->required();
    gen->add_option("--n", n_param, "rank/budget parameter");
    gen->add_option("--N", width, "sequence width")->required();
    gen->add_option("--seed", seed, "seed (recorded; generators are "
                                    "deterministic)");
    gen->add_option("--output,-o", output_path, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "summarize a vctm file");
    analyze->add_option("file", input_path, "vctm input")->required();
    analyze->add_flag("--dedup", dedup, "accept duplicate rows");
    analyze->add_option("--window", windows, "window extents to rank at");
    analyze->add_option("--output,-o", output_path, "output path");

    auto* cert = app.add_subcommand("certify",
                                    "scheme-certify a vctm file at (n, l)");
    cert->add_option("file", input_path, "vctm input")->required();
    cert->add_option("--rank", rank_n, "switch count n")->required();
    cert->add_option("--window", window, "window extent l");
    cert->add_flag("--dedup", dedup, "accept duplicate rows");
    cert->add_option("--output,-o", output_path, "output path");

    auto* fit_cmd = app.add_subcommand("fit", "growth-exponent fit");
    fit_cmd->add_option("--family", family, "family kind or compact spec")
        ->required();
    fit_cmd->add_option("--n", n_param, "rank/budget parameter");
    fit_cmd->add_option("--grid", grid_csv, "comma-separated widths");
    fit_cmd->add_option("--expect", expect, "expected integer exponent");
    fit_cmd->add_option("--seed", seed, "seed (recorded)");
    fit_cmd->add_option("--output,-o", output_path, "JSON output path");
    fit_cmd->add_option("--csv", csv_path, "also write N,count CSV here");

    auto* wit = app.add_subcommand("witness",
                                   "emit the canonical witness family");
    wit->add_option("--n", n_param, "rank parameter")->required();
    wit->add_option("--N", width, "sequence width")->required();
    wit->add_option("--output,-o", output_path, "output path");

    auto* coin = app.add_subcommand("coincide",
                                    "three-way rank coincidence report");
    coin->add_option("--family", family, "family kind or compact spec")
        ->required();
    coin->add_option("--n", n_param, "rank/budget parameter");
    coin->add_option("--window", window, "window extent l");
    coin->add_option("--grid", grid_csv, "comma-separated fit widths");
    coin->add_option("--rank-widths", rank_widths_csv,
                     "comma-separated widths for rank stabilization");
    coin->add_option("--output,-o", output_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) {
        const vcind::FamilySpec spec = resolve_spec(family, n_param, seed);
        const vcind::TraceMatrix m = vcind::generate(spec, width);
        std::ostringstream out;
        vcind::write_vctm(out, m);
        emit(out.str(), output_path);
        return kExitOk;
    }

    if (analyze->parsed()) {
        const vcind::TraceMatrix m = vcind::read_vctm_file(input_path, dedup);
        if (windows.empty()) windows.push_back(0);
        ordered_json j;
        j["config"] = {{"command", "analyze"},
                       {"file", input_path},
                       {"dedup", dedup},
                       {"windows", windows}};
        j["width"] = m.width();
        j["distinct_count"] = m.distinct_count();
        std::size_t max_alt = 0;
        for (const auto& r : m.rows()) max_alt = std::max(max_alt, r.alternation());
        j["max_alternation"] = max_alt;
        j["family_rank"] = ordered_json::object();
        for (std::size_t l : windows) {
            j["family_rank"][std::to_string(l)] = vcind::family_rank(m, l);
        }
        j["joint_cuts"] = cuts_to_json(vcind::joint_cuts(m));
        emit(j.dump(2), output_path);
        return kExitOk;
    }

    if (cert->parsed()) {
        const vcind::TraceMatrix m = vcind::read_vctm_file(input_path, dedup);
        const vcind::SchemeParams params{rank_n, window};
        const vcind::BoundCertificate result = vcind::certify(m, params);
        if (result.ok) {
            emit(vcind::certificate_to_json(result, m), output_path);
            return kExitOk;
        }
        ordered_json j;
        j["config"] = {{"command", "certify"},
                       {"file", input_path},
                       {"rank", rank_n},
                       {"window", window}};
        j["certified"] = false;
        j["failing_row"] = result.failing_row->to_string();
        emit(j.dump(2), output_path);
        return kExitFailedExpectation;
    }

    if (fit_cmd->parsed()) {
        const vcind::FamilySpec spec = resolve_spec(family, n_param, seed);
        const std::vector<std::size_t> grid =
            grid_csv.empty() ? vcind::default_grid(spec) : parse_grid(grid_csv);
        const vcind::DensityEstimate est = vcind::fit(spec, grid);
        ordered_json j;
        j["config"] = {{"command", "fit"},
                       {"family", spec.to_string()},
                       {"grid", grid},
                       {"seed", seed},
                       {"expect", expect}};
        j.update(estimate_to_json(est));
        emit(j.dump(2), output_path);
        if (!csv_path.empty()) emit(vcind::grid_to_csv(est), csv_path);
        if (expect >= 0) {
            const bool matched =
                est.verdict == vcind::DensityEstimate::Verdict::integer &&
                est.nearest_integer == expect;
            return matched ? kExitOk : kExitFailedExpectation;
        }
        return kExitOk;
    }

    if (wit->parsed()) {
        if (n_param < 0) throw CLI::ValidationError("--n must be >= 0");
        const auto pattern =
            vcind::WitnessPattern::canonical(static_cast<std::size_t>(n_param));
        const vcind::TraceMatrix m = vcind::build_witness_family(pattern, width);
        std::ostringstream out;
        vcind::write_vctm(out, m);
        emit(out.str(), output_path);
        return kExitOk;
    }

    if (coin->parsed()) {
        const vcind::FamilySpec spec = resolve_spec(family, n_param, seed);
        const std::vector<std::size_t> grid =
            grid_csv.empty() ? vcind::default_grid(spec) : parse_grid(grid_csv);
        const vcind::CoincidenceReport report = vcind::coincidence_report(
            spec, grid, window, parse_grid(rank_widths_csv));
        ordered_json j;
        j["config"] = {{"command", "coincide"},
                       {"family", spec.to_string()},
                       {"window", window},
                       {"grid", grid},
                       {"rank_widths", parse_grid(rank_widths_csv)}};
        j["fitted_exponent"] = report.estimate.exponent;
        j["fitted_integer"] = report.fitted_integer;
        j["stabilized_rank"] = report.stabilized_rank;
        j["rank_stabilized"] = report.rank_stabilized;
        j["minimal_certifiable_n"] = report.minimal_certifiable_n;
        j["verdict"] = report.estimate.verdict_string();
        j["agree"] = report.agree;
        emit(j.dump(2), output_path);
        return report.agree ? kExitOk : kExitFailedExpectation;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
