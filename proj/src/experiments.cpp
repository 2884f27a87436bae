#include "reinsim/experiments.hpp"

#include <cmath>
#include <sstream>

#include "reinsim/errors.hpp"
#include "reinsim/stats.hpp"
#include "reinsim/valuation.hpp"

namespace reinsim {
namespace {

std::string config_comment(const ExperimentConfig& config) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : config.resolved()) {
        out << (first ? "" : " ") << key << "=" << value;
        first = false;
    }
    return out.str();
}

double evp_alpha0(double theta, double eta, double r, double T) {
    return std::exp(-r * T) * std::log1p(theta) / eta;
}

double vp_exp_alpha0(double theta, double eta, double r, double T, double zeta) {
    return std::exp(-r * T) * std::log1p(2.0 * theta / zeta) / eta;
}

} // namespace

CsvTable run_dynamic_strategies(const ExperimentConfig& config) {
    const PsiContext evp = config.context(PrincipleKind::EVP);
    const PsiContext vp = config.context(PrincipleKind::VP);
    const TimeGrid grid(0.0, config.T, config.n_steps);

    // VP retention samples per grid node over M factor paths.
    std::vector<std::vector<double>> vp_samples(
        static_cast<std::size_t>(grid.n_nodes()),
        std::vector<double>(static_cast<std::size_t>(config.n_paths)));
    for (long p = 0; p < config.n_paths; ++p) {
        RngStream rng(config.seed, static_cast<std::uint64_t>(p));
        const FactorPath path = simulate_factor(config.factor(), grid, rng);
        for (int i = 0; i < grid.n_nodes(); ++i) {
            vp_samples[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] =
                optimal_retention(vp, grid.time(i), path.values[static_cast<std::size_t>(i)])
                    .alpha_star;
        }
    }

    CsvTable table;
    table.comment = config_comment(config);
    table.header = {"t", "alpha_evp", "alpha_vp_mean", "alpha_vp_q05", "alpha_vp_q95"};
    for (int i = 0; i < grid.n_nodes(); ++i) {
        const double t = grid.time(i);
        const auto& samples = vp_samples[static_cast<std::size_t>(i)];
        RunningStat stat;
        for (double a : samples) stat.add(a);
        table.rows.push_back({t, optimal_retention(evp, t, config.y0).alpha_star, stat.mean(),
                              quantile(samples, 0.05), quantile(samples, 0.95)});
    }
    return table;
}

CsvTable run_sweep(const ExperimentConfig& config, const std::string& parameter,
                   const std::vector<double>& values) {
    const double zeta0 = std::exp(config.y0) + 1.0;
    CsvTable table;
    table.comment = config_comment(config) + " sweep=" + parameter;
    table.header = {"value", "alpha0_evp", "alpha0_vp_at_y0"};
    for (double v : values) {
        if (!std::isfinite(v)) throw ConfigError("run_sweep: sweep values must be finite");
        double eta = config.eta, theta = config.theta, r = config.r, T = config.T;
        if (parameter == "eta") eta = v;
        else if (parameter == "theta") theta = v;
        else if (parameter == "r") r = v;
        else if (parameter == "T") T = v;
        else throw ConfigError("run_sweep: unknown parameter '" + parameter + "'");
        if (eta <= 0.0) throw ConfigError("run_sweep: eta must be > 0");
        if (theta < 0.0) throw ConfigError("run_sweep: theta must be >= 0");
        table.rows.push_back({v, evp_alpha0(theta, eta, r, T),
                              vp_exp_alpha0(theta, eta, r, T, zeta0)});
    }
    return table;
}

CsvTable run_value_surface(const ExperimentConfig& config, const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    const PsiContext ctx = config.context(PrincipleKind::VP);
    CsvTable table;
    table.comment = config_comment(config);
    table.header = {"x", "y", "v_estimate", "std_error"};
    for (double y : ys) {
        for (double x : xs) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw ConfigError("run_value_surface: grid values must be finite");
            }
            const ValueEstimate est = value_feynman_kac(ctx, 0.0, x, y, config.n_paths,
                                                        config.n_steps, config.seed);
            table.rows.push_back({x, y, est.mean, est.std_error});
        }
    }
    return table;
}

CsvTable run_scenario(const ExperimentConfig& config) {
    const PsiContext evp = config.context(PrincipleKind::EVP);
    const PsiContext vp = config.context(PrincipleKind::VP);
    const TimeGrid grid(0.0, config.T, config.n_steps);

    RngStream factor_rng(config.seed, 0, 0);
    RngStream claims_rng(config.seed, 0, 1);
    const FactorPath path = simulate_factor(config.factor(), grid, factor_rng);
    const std::vector<ClaimRecord> claims = simulate_claims(evp.claims, path, claims_rng);

    const std::vector<double> alpha_evp = retention_path(evp, path);
    const std::vector<double> alpha_vp = retention_path(vp, path);
    const WealthPath x_evp =
        wealth_closed_form(evp.market, evp.principle, evp.claims, path, claims, alpha_evp);
    const WealthPath x_vp =
        wealth_closed_form(vp.market, vp.principle, vp.claims, path, claims, alpha_vp);

    CsvTable table;
    table.comment = config_comment(config);
    table.header = {"t", "y", "alpha_evp", "alpha_vp", "x_evp", "x_vp"};
    for (int i = 0; i < grid.n_nodes(); ++i) {
        const auto u = static_cast<std::size_t>(i);
        table.rows.push_back({grid.time(i), path.values[u], alpha_evp[u], alpha_vp[u],
                              x_evp.values[u], x_vp.values[u]});
    }
    return table;
}

} // namespace reinsim
