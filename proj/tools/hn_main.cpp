#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hn/cli/commands.hpp"

namespace {

void add_common(CLI::App* cmd, hn::cli::RunConfig& config, std::string& output, std::string& svg_path,
                bool need_input = true) {
    cmd->add_option("--instance", config.instance, "instance name (filtvec|quiver|phimod)");
    auto* in = cmd->add_option("--input", config.inputs, "object file path (repeatable)");
    if (need_input) in->required();
    cmd->add_option("--output", output, "write the report to this path instead of stdout");
    cmd->add_option("--format", config.format, "report format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--svg", svg_path, "write an SVG of the polygon to this path");
    cmd->add_option("--seed", config.seed, "seed for all derived randomness (default 0)");
    cmd->add_option("--samples", config.samples, "number of generated samples (axioms)");
    cmd->add_option("--precision", config.precision, "series working precision (phimod)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slope-filtration engine: HN filtrations, polygons, oracles and axiom checks"};
    app.require_subcommand(1);

    hn::cli::RunConfig config;
    std::string output, svg_path;

    auto* compute = app.add_subcommand("compute", "compute the HN filtration and polygon of an object");
    add_common(compute, config, output, svg_path);
    auto* oracle = app.add_subcommand("oracle", "compare the engine polygon with the convex-hull oracle");
    add_common(oracle, config, output, svg_path);
    auto* axioms = app.add_subcommand("axioms", "run the instance axiom checker over generated samples");
    add_common(axioms, config, output, svg_path, /*need_input=*/false);
    auto* hom = app.add_subcommand("hom", "hom-space dimension and slope consistency for two objects");
    add_common(hom, config, output, svg_path);
    auto* polygon = app.add_subcommand("polygon", "emit just the HN polygon (TSV/JSON/SVG)");
    add_common(polygon, config, output, svg_path);

    CLI11_PARSE(app, argc, argv);

    for (auto* cmd : {compute, oracle, axioms, hom, polygon})
        if (cmd->parsed()) config.command = cmd->get_name();
    config.want_svg = !svg_path.empty();

    hn::cli::RunResult result;
    try {
        result = hn::cli::run(config);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }

    if (!svg_path.empty() && !result.svg.empty()) {
        std::ofstream out(svg_path);
        if (!out) {
            std::cerr << "cannot write SVG to " << svg_path << "\n";
            return 2;
        }
        out << result.svg;
    }
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write report to " << output << "\n";
            return 2;
        }
        out << result.report;
    } else {
        std::cout << result.report;
    }
    return result.exit_code;
}
