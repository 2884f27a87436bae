#include "reinsim/wealth.hpp"

#include <algorithm>
#include <cmath>

#include "reinsim/errors.hpp"

namespace reinsim {
namespace {

int cell_of(const TimeGrid& grid, double t) {
    const int i = static_cast<int>((t - grid.t0) / grid.dt());
    return std::clamp(i, 0, grid.n_steps - 1);
}

// Net premium inflow c - q at each grid node.
std::vector<double> net_flow(const MarketParams& market, const PremiumPrinciple& principle,
                             const ClaimsModel& claims_model, const FactorPath& factor,
                             const std::vector<double>& retention) {
    std::vector<double> g(factor.values.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = factor.grid.time(static_cast<int>(i));
        const double y = factor.values[i];
        g[i] = market.c(t, y) - premium_rate(principle, claims_model, t, y, retention[i]);
    }
    return g;
}

void check_inputs(const FactorPath& factor, const std::vector<double>& retention) {
    if (retention.size() != factor.values.size()) {
        throw ConfigError("wealth: retention path must align with the factor grid");
    }
}

} // namespace

WealthPath wealth_closed_form(const MarketParams& market, const PremiumPrinciple& principle,
                              const ClaimsModel& claims_model, const FactorPath& factor,
                              const std::vector<ClaimRecord>& claims,
                              const std::vector<double>& retention) {
    check_inputs(factor, retention);
    const TimeGrid& grid = factor.grid;
    const double r = market.r;
    const std::vector<double> g = net_flow(market, principle, claims_model, factor, retention);

    WealthPath wp{grid, {}, retention, {}};
    wp.values.resize(g.size());

    // X_t = e^{rt} (R0 + int_0^t e^{-rs} g(s) ds - sum e^{-r T_n} (Z_n ^ alpha)),
    // premium integral by the trapezoid rule, claims discounted at exact times.
    std::size_t next_claim = 0;
    double integral = 0.0;
    double claim_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = grid.time(static_cast<int>(i));
        if (i > 0) {
            const double t_prev = grid.time(static_cast<int>(i - 1));
            integral += 0.5 * grid.dt() * (std::exp(-r * t_prev) * g[i - 1] +
                                           std::exp(-r * t) * g[i]);
        }
        while (next_claim < claims.size() && claims[next_claim].arrival_time <= t) {
            const ClaimRecord& cl = claims[next_claim];
            const int cell = cell_of(grid, cl.arrival_time);
            const double retained = std::min(cl.size, retention[static_cast<std::size_t>(cell)]);
            claim_sum += std::exp(-r * cl.arrival_time) * retained;
            wp.claims_hit.emplace_back(cell, retained);
            ++next_claim;
        }
        wp.values[i] = std::exp(r * t) * (market.R0 + integral - claim_sum);
    }
    return wp;
}

WealthPath wealth_euler(const MarketParams& market, const PremiumPrinciple& principle,
                        const ClaimsModel& claims_model, const FactorPath& factor,
                        const std::vector<ClaimRecord>& claims,
                        const std::vector<double>& retention) {
    check_inputs(factor, retention);
    const TimeGrid& grid = factor.grid;
    const std::vector<double> g = net_flow(market, principle, claims_model, factor, retention);

    // Retained claim amounts bucketed per grid cell.
    std::vector<double> jump(static_cast<std::size_t>(std::max(grid.n_steps, 1)), 0.0);
    WealthPath wp{grid, {}, retention, {}};
    for (const ClaimRecord& cl : claims) {
        const int cell = cell_of(grid, cl.arrival_time);
        const double retained = std::min(cl.size, retention[static_cast<std::size_t>(cell)]);
        jump[static_cast<std::size_t>(cell)] += retained;
        wp.claims_hit.emplace_back(cell, retained);
    }

    wp.values.resize(g.size());
    wp.values[0] = market.R0;
    double x = market.R0;
    for (int i = 0; i < grid.n_steps; ++i) {
        x += (market.r * x + g[static_cast<std::size_t>(i)]) * grid.dt() -
             jump[static_cast<std::size_t>(i)];
        wp.values[static_cast<std::size_t>(i + 1)] = x;
    }
    return wp;
}

UtilityValue terminal_utility(double x_T, double eta) {
    if (eta <= 0.0) throw ConfigError("terminal_utility: eta must be > 0");
    const double exponent = -eta * x_T;
    if (exponent > 700.0) {
        return {1.0 - 1e300, true};
    }
    return {1.0 - std::exp(exponent), false};
}

} // namespace reinsim
