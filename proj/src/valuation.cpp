#include "reinsim/valuation.hpp"

#include <cmath>

#include "reinsim/errors.hpp"
#include "reinsim/stats.hpp"

namespace reinsim {
namespace {

constexpr std::uint64_t kFactorSubstream = 0;
constexpr std::uint64_t kClaimsSubstream = 1;

} // namespace

ValueEstimate value_feynman_kac(const PsiContext& ctx, double t, double x, double y,
                                long n_paths, int n_steps, std::uint64_t seed) {
    if (t > ctx.market.T) throw ConfigError("value_feynman_kac: t must not exceed T");
    const double prefactor =
        std::exp(-ctx.market.eta * x * std::exp(ctx.market.r * (ctx.market.T - t)));
    ValueEstimate est;
    est.method = ValueMethod::FeynmanKac;
    if (t == ctx.market.T) {
        est.mean = prefactor; // boundary condition, no simulation needed
        est.n_paths = n_paths;
        return est;
    }

    const TimeGrid grid(t, ctx.market.T, n_steps);
    FactorModel model = ctx.factor;
    model.y0 = y;

    RunningStat stat;
    bool flagged = false;
    for (long p = 0; p < n_paths; ++p) {
        RngStream rng(seed, static_cast<std::uint64_t>(p), kFactorSubstream);
        const FactorPath path = simulate_factor(model, grid, rng);
        // Trapezoid of eta e^{r(T-s)} (inf_a Psi - c) along the path.
        double exponent = 0.0;
        double prev = 0.0;
        for (int i = 0; i <= grid.n_steps; ++i) {
            const double s = grid.time(i);
            const double ys = path.values[static_cast<std::size_t>(i)];
            const double alpha = optimal_retention(ctx, s, ys).alpha_star;
            const double integrand =
                ctx.market.eta * std::exp(ctx.market.r * (ctx.market.T - s)) *
                (psi(ctx, s, ys, alpha) - ctx.market.c(s, ys));
            if (i > 0) exponent += 0.5 * grid.dt() * (prev + integrand);
            prev = integrand;
        }
        if (std::abs(exponent) > 700.0) flagged = true;
        stat.add(std::exp(exponent));
    }
    est.mean = prefactor * stat.mean();
    est.std_error = prefactor * stat.std_error();
    est.n_paths = n_paths;
    est.overflow_flagged = flagged;
    return est;
}

ValueEstimate value_direct(const PsiContext& ctx, double t, double x, double y,
                           const RetentionPolicy& policy, long n_paths, int n_steps,
                           std::uint64_t seed) {
    if (t > ctx.market.T) throw ConfigError("value_direct: t must not exceed T");
    ValueEstimate est;
    est.method = ValueMethod::DirectUtility;
    if (t == ctx.market.T) {
        est.mean = std::exp(-ctx.market.eta * x);
        est.n_paths = n_paths;
        return est;
    }

    const TimeGrid grid(t, ctx.market.T, n_steps);
    FactorModel model = ctx.factor;
    model.y0 = y;
    MarketParams market = ctx.market;
    market.R0 = x;

    RunningStat stat;
    bool flagged = false;
    for (long p = 0; p < n_paths; ++p) {
        RngStream factor_rng(seed, static_cast<std::uint64_t>(p), kFactorSubstream);
        RngStream claims_rng(seed, static_cast<std::uint64_t>(p), kClaimsSubstream);
        const FactorPath path = simulate_factor(model, grid, factor_rng);
        const std::vector<ClaimRecord> claims = simulate_claims(ctx.claims, path, claims_rng);
        std::vector<double> alphas(path.values.size());
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            alphas[i] = policy(grid.time(static_cast<int>(i)), path.values[i]);
        }
        const WealthPath wp =
            wealth_closed_form(market, ctx.principle, ctx.claims, path, claims, alphas);
        const double exponent = -ctx.market.eta * wp.values.back();
        if (exponent > 700.0) {
            flagged = true;
            stat.add(std::exp(700.0));
        } else {
            stat.add(std::exp(exponent));
        }
    }
    est.mean = stat.mean();
    est.std_error = stat.std_error();
    est.n_paths = n_paths;
    est.overflow_flagged = flagged;
    return est;
}

} // namespace reinsim
