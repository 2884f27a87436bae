#include "reinsim/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "reinsim/errors.hpp"

namespace reinsim {
namespace {

// Exponent of the utility weight inside the retention objective.
double exp_weight(const PsiContext& ctx, double t) {
    return ctx.market.eta * std::exp(ctx.market.r * (ctx.market.T - t));
}

bool is_exponential_family(const PsiContext& ctx) {
    return static_cast<bool>(ctx.claims.size_family.exponential_rate);
}

} // namespace

double psi(const PsiContext& ctx, double t, double y, double alpha) {
    const double q = premium_rate(ctx.principle, ctx.claims, t, y, alpha);
    if (alpha == 0.0) return q;
    const double lambda = ctx.claims.intensity(t, y);
    const double k = exp_weight(ctx, t);
    return q + lambda * exp_weighted_survival_integral(ctx.claims.size_family, k, alpha, y);
}

double psi_derivative(const PsiContext& ctx, double t, double y, double alpha) {
    const double lambda = ctx.claims.intensity(t, y);
    const double k = exp_weight(ctx, t);
    // Guard the exp-overflow x survival-underflow corner, which would yield NaN.
    const double survival = ctx.claims.size_family.survival(alpha, y);
    const double hazard = survival == 0.0 ? 0.0 : lambda * std::exp(k * alpha) * survival;
    return premium_derivative(ctx.principle, ctx.claims, t, y, alpha) + hazard;
}

bool in_A0(const PsiContext& ctx, double t, double y) {
    return -premium_derivative(ctx.principle, ctx.claims, t, y, 0.0) <=
           ctx.claims.intensity(t, y);
}

double solve_first_order(const PsiContext& ctx, double t, double y, double bracket_max) {
    if (psi_derivative(ctx, t, y, 0.0) >= 0.0) {
        throw std::logic_error("solve_first_order: (t,y) lies in the full-reinsurance region");
    }
    // Expand [lo, hi] by doubling until the derivative changes sign.
    double lo = 0.0;
    double hi = std::log1p(ctx.principle.theta) / ctx.market.eta *
                    std::exp(std::abs(ctx.market.r) * ctx.market.T) + 1.0;
    while (psi_derivative(ctx, t, y, hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > bracket_max) {
            throw NoInteriorRootError(
                "solve_first_order: no sign change of the first-order condition up to "
                "bracket_max=" + std::to_string(bracket_max) +
                " (interior-root existence fails for this model)");
        }
    }
    constexpr double kTol = 1e-10;
    while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        (psi_derivative(ctx, t, y, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

bool convexity_certificate(const PsiContext& ctx, double t, double y, double alpha_hat) {
    const double lambda = ctx.claims.intensity(t, y);
    const double k = exp_weight(ctx, t);
    // psi'' = q'' + lambda e^{k alpha} (k survival - density) must be positive.
    const double lhs = premium_second_derivative(ctx.principle, ctx.claims, t, y, alpha_hat);
    const double density = -ctx.claims.size_family.survival_density(alpha_hat, y);
    const double rhs = lambda * std::exp(k * alpha_hat) *
                       (density - k * ctx.claims.size_family.survival(alpha_hat, y));
    return lhs > rhs;
}

RetentionDecision optimal_retention(const PsiContext& ctx, double t, double y) {
    if (ctx.claims.size_family.bounded_support) {
        throw ConfigError("optimal_retention: bounded-support claim families are not supported");
    }
    RetentionDecision d;
    if (in_A0(ctx, t, y)) {
        d.alpha_star = 0.0;
        d.regime = RetentionRegime::FullReinsurance;
        return d;
    }
    const double tau = ctx.market.T - t;
    if (ctx.principle.kind == PrincipleKind::EVP) {
        d.alpha_star = std::exp(-ctx.market.r * tau) * std::log1p(ctx.principle.theta) /
                       ctx.market.eta;
        d.regime = RetentionRegime::ClosedFormEVP;
    } else if (ctx.principle.kind == PrincipleKind::VP && is_exponential_family(ctx)) {
        const double zeta = ctx.claims.size_family.exponential_rate(y);
        d.alpha_star = std::exp(-ctx.market.r * tau) *
                       std::log1p(2.0 * ctx.principle.theta / zeta) / ctx.market.eta;
        d.regime = RetentionRegime::ClosedFormVPExp;
    } else {
        d.alpha_star = solve_first_order(ctx, t, y);
        d.regime = RetentionRegime::InteriorRoot;
    }
    d.foc_residual = psi_derivative(ctx, t, y, d.alpha_star);
    d.convexity_certified = convexity_certificate(ctx, t, y, d.alpha_star);
    return d;
}

std::vector<double> retention_path(const PsiContext& ctx, const FactorPath& path) {
    std::vector<double> alphas;
    alphas.reserve(path.values.size());
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        alphas.push_back(
            optimal_retention(ctx, path.grid.time(static_cast<int>(i)), path.values[i]).alpha_star);
    }
    return alphas;
}

std::vector<std::string> validate_context(const PsiContext& ctx) {
    if (ctx.claims.size_family.bounded_support) {
        throw ConfigError("validate_context: bounded-support claim families are rejected "
                          "(the first-order condition degenerates beyond the support)");
    }
    if (ctx.market.eta <= 0.0) throw ConfigError("validate_context: eta must be > 0");
    if (ctx.market.T <= 0.0) throw ConfigError("validate_context: T must be > 0");
    if (ctx.market.R0 <= 0.0) throw ConfigError("validate_context: R0 must be > 0");
    return validate_assumptions(ctx.principle, ctx.claims, ctx.market);
}

} // namespace reinsim
