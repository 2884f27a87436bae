#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reinsim/config.hpp"
#include "reinsim/errors.hpp"
#include "reinsim/experiments.hpp"
#include "reinsim/svg.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    bool svg = false;
    bool seed_set = false;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value lines)");
    cmd->add_option("--set", opts.overrides, "Override a config key, e.g. --set market.eta=1.0");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_flag("--svg", opts.svg, "Also render an SVG chart next to each CSV");
    cmd->add_option("--seed", opts.seed, "Override the random seed")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
}

reinsim::ExperimentConfig resolve(const CommonOpts& opts) {
    reinsim::ExperimentConfig cfg = reinsim::load_config(opts.config_path, opts.overrides);
    if (opts.seed_set) cfg.seed = opts.seed;
    for (const std::string& w : cfg.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return cfg;
}

std::string out_path(const CommonOpts& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out_dir);
    return (std::filesystem::path(opts.out_dir) / name).string();
}

void write_outputs(const CommonOpts& opts, const reinsim::CsvTable& table,
                   const std::string& stem, const std::string& x_col,
                   const std::vector<std::string>& y_cols) {
    const std::string csv_path = out_path(opts, stem + ".csv");
    table.write(csv_path);
    std::cout << "wrote " << csv_path << "\n";
    if (opts.svg) {
        const std::string svg_path = out_path(opts, stem + ".svg");
        reinsim::emit_svg(table, x_col, y_cols, svg_path);
        std::cout << "wrote " << svg_path << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Excess-of-loss reinsurance simulation and optimization toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string sweep_param = "eta";
    std::vector<double> sweep_values;
    double x_min = 0.5, x_max = 2.0, y_min = 0.0, y_max = 2.0;
    int x_count = 4, y_count = 5;

    auto* validate = app.add_subcommand("validate", "Check a configuration and print it");
    add_common(validate, opts);

    auto* simulate = app.add_subcommand("simulate", "Simulate one scenario under both principles");
    add_common(simulate, opts);

    auto* optimal = app.add_subcommand("optimal", "Dynamic optimal strategies on the time grid");
    add_common(optimal, opts);

    auto* sweep = app.add_subcommand("sweep", "Sensitivity of alpha*(0) to one parameter");
    add_common(sweep, opts);
    sweep->add_option("--param", sweep_param, "One of eta, theta, r, T")->required();
    sweep->add_option("--values", sweep_values, "Sweep values (comma separated or repeated)")
        ->required()
        ->delimiter(',');

    auto* value = app.add_subcommand("value", "Value surface v(0,x,y) via Feynman-Kac");
    add_common(value, opts);
    value->add_option("--x-min", x_min, "Smallest initial wealth");
    value->add_option("--x-max", x_max, "Largest initial wealth");
    value->add_option("--x-count", x_count, "Number of wealth grid points");
    value->add_option("--y-min", y_min, "Smallest factor value");
    value->add_option("--y-max", y_max, "Largest factor value");
    value->add_option("--y-count", y_count, "Number of factor grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // bad command line is a configuration error
    }

    try {
        const reinsim::ExperimentConfig cfg = resolve(opts);
        if (validate->parsed()) {
            for (const auto& [key, val] : cfg.resolved()) {
                std::cout << key << " = " << val << "\n";
            }
        } else if (simulate->parsed()) {
            write_outputs(opts, reinsim::run_scenario(cfg), "scenario", "t",
                          {"y", "x_evp", "x_vp"});
        } else if (optimal->parsed()) {
            write_outputs(opts, reinsim::run_dynamic_strategies(cfg), "dynamic_strategies", "t",
                          {"alpha_evp", "alpha_vp_mean", "alpha_vp_q05", "alpha_vp_q95"});
        } else if (sweep->parsed()) {
            write_outputs(opts, reinsim::run_sweep(cfg, sweep_param, sweep_values),
                          "sweep_" + sweep_param, "value", {"alpha0_evp", "alpha0_vp_at_y0"});
        } else if (value->parsed()) {
            if (x_count < 1 || y_count < 1) {
                throw reinsim::ConfigError("value: grid counts must be >= 1");
            }
            std::vector<double> xs, ys;
            for (int i = 0; i < x_count; ++i) {
                xs.push_back(x_count == 1 ? x_min : x_min + (x_max - x_min) * i / (x_count - 1));
            }
            for (int i = 0; i < y_count; ++i) {
                ys.push_back(y_count == 1 ? y_min : y_min + (y_max - y_min) * i / (y_count - 1));
            }
            write_outputs(opts, reinsim::run_value_surface(cfg, xs, ys), "value_surface", "x",
                          {"v_estimate"});
        }
    } catch (const reinsim::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const reinsim::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
