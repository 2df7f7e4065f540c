#include <iostream>

#include <CLI11.hpp>

#include "riskgeom/cli.hpp"
#include "riskgeom/errors.hpp"

// Exit codes: 0 success, 1 failed axiom run or unexpected error,
// 2 malformed configuration/flags, 3 unreadable or invalid input data.

int main(int argc, char** argv) {
    CLI::App app{"Depth-trimmed regions and cone-ordered risk measures for empirical portfolios"};
    app.require_subcommand(1);

    riskgeom::cli::ComputeConfig cc;
    CLI::App* compute = app.add_subcommand("compute", "Build a region and derive its risk point");
    compute->add_option("--dist", cc.dist_path, "Input distribution (.json points/weights or .csv)")
        ->required();
    compute->add_option("--family", cc.family, "Region family: zonoid|ech|halfspace");
    compute->add_option("--alpha", cc.alpha, "Real trim level");
    compute->add_option("--n", cc.n, "Integer trim level (ech only)");
    compute->add_option("--cone", cc.cone_path, "Cone json {\"A\": [[...], ...]}");
    compute->add_option("--dir", cc.extra_dirs, "Extra halfspace direction 'x,y,...' (repeatable)");
    compute->add_option("--out", cc.out_path, "Write the report here (atomic)");
    compute->add_option("--svg", cc.svg_path, "Render the 2D region here");
    compute->add_option("--grid", cc.grid_2d, "Angular resolution of the 2D grid");

    riskgeom::cli::AxiomsConfig ac;
    CLI::App* ax = app.add_subcommand("axioms", "Run the axiom property harness");
    ax->add_option("--suite", ac.suite, "risk|region|all");
    ax->add_option("--id", ac.id, "Restrict to one measure/family id");
    CLI::Option* seed_opt =
        ax->add_option("--seed", ac.seed, "Suite seed (env RISKGEOM_SEED overrides the default)");
    ax->add_option("--risk-trials", ac.risk_trials, "Trials per risk check");
    ax->add_option("--region-trials", ac.region_trials, "Trials per region check");
    ax->add_option("--out", ac.out_path, "Write the report here (atomic)");

    riskgeom::cli::SvgConfig sc;
    CLI::App* svg = app.add_subcommand("svg", "Render a 2D region to SVG");
    svg->add_option("--dist", sc.dist_path, "Input distribution (.json or .csv)")->required();
    svg->add_option("--family", sc.family, "zonoid|ech");
    svg->add_option("--alpha", sc.alpha, "Real trim level");
    svg->add_option("--n", sc.n, "Integer trim level (ech only)");
    svg->add_option("--cone", sc.cone_path, "Cone json");
    svg->add_option("--out", sc.out_path, "Output .svg path")->required();
    svg->add_option("--grid", sc.grid_2d, "Angular resolution of the 2D grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad flags are configuration errors
    }
    ac.seed_set = seed_opt->count() > 0;

    try {
        if (compute->parsed()) return riskgeom::cli::cmd_compute(cc, std::cout);
        if (ax->parsed()) return riskgeom::cli::cmd_axioms(ac, std::cout);
        if (svg->parsed()) return riskgeom::cli::cmd_svg(sc);
    } catch (const riskgeom::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const riskgeom::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
