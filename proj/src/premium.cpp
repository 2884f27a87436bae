#include "reinsim/premium.hpp"

#include <cmath>
#include <utility>

#include "reinsim/errors.hpp"

namespace reinsim {

PremiumPrinciple PremiumPrinciple::evp(double theta) {
    if (theta < 0.0) throw ConfigError("PremiumPrinciple: safety loading must be >= 0");
    PremiumPrinciple p;
    p.kind = PrincipleKind::EVP;
    p.theta = theta;
    return p;
}

PremiumPrinciple PremiumPrinciple::vp(double theta) {
    if (theta < 0.0) throw ConfigError("PremiumPrinciple: safety loading must be >= 0");
    PremiumPrinciple p;
    p.kind = PrincipleKind::VP;
    p.theta = theta;
    return p;
}

PremiumPrinciple PremiumPrinciple::custom(std::function<double(double, double, double)> rate,
                                          std::function<double(double, double, double)> derivative,
                                          std::function<double(double, double, double)> second) {
    PremiumPrinciple p;
    p.kind = PrincipleKind::Custom;
    p.custom_rate = std::move(rate);
    p.custom_derivative = std::move(derivative);
    p.custom_second_derivative = std::move(second);
    return p;
}

double premium_rate(const PremiumPrinciple& principle, const ClaimsModel& claims,
                    double t, double y, double alpha) {
    if (principle.kind == PrincipleKind::Custom) return principle.custom_rate(t, y, alpha);
    const double lambda = claims.intensity(t, y);
    const double ceded1 = ceded_moment(claims.size_family, alpha, y, 1);
    if (principle.kind == PrincipleKind::EVP) {
        return (1.0 + principle.theta) * lambda * ceded1;
    }
    const double ceded2 = ceded_moment(claims.size_family, alpha, y, 2);
    return lambda * ceded1 + principle.theta * lambda * ceded2;
}

double premium_derivative(const PremiumPrinciple& principle, const ClaimsModel& claims,
                          double t, double y, double alpha) {
    if (principle.kind == PrincipleKind::Custom) {
        if (principle.custom_derivative) return principle.custom_derivative(t, y, alpha);
        const double h = 1e-6 * (1.0 + std::abs(alpha));
        const double lo = std::max(0.0, alpha - h);
        return (principle.custom_rate(t, y, alpha + h) - principle.custom_rate(t, y, lo)) /
               (alpha + h - lo);
    }
    const double lambda = claims.intensity(t, y);
    const double sv = claims.size_family.survival(alpha, y);
    if (principle.kind == PrincipleKind::EVP) {
        return -(1.0 + principle.theta) * lambda * sv;
    }
    // VP: lambda Fbar(alpha)(2 theta alpha - 1) - 2 theta lambda int_alpha^inf z dF
    return lambda * sv * (2.0 * principle.theta * alpha - 1.0) -
           2.0 * principle.theta * lambda * tail_mean(claims.size_family, alpha, y);
}

double premium_second_derivative(const PremiumPrinciple& principle, const ClaimsModel& claims,
                                 double t, double y, double alpha) {
    if (principle.kind == PrincipleKind::Custom) {
        if (principle.custom_second_derivative) {
            return principle.custom_second_derivative(t, y, alpha);
        }
        const double h = 1e-5 * (1.0 + std::abs(alpha));
        const double lo = std::max(0.0, alpha - h);
        return (premium_derivative(principle, claims, t, y, alpha + h) -
                premium_derivative(principle, claims, t, y, lo)) /
               (alpha + h - lo);
    }
    const double lambda = claims.intensity(t, y);
    const double density = -claims.size_family.survival_density(alpha, y);
    if (principle.kind == PrincipleKind::EVP) {
        return (1.0 + principle.theta) * lambda * density;
    }
    return lambda * density + 2.0 * principle.theta * lambda *
                                  claims.size_family.survival(alpha, y);
}

std::vector<std::string> validate_assumptions(const PremiumPrinciple& principle,
                                              const ClaimsModel& claims,
                                              const MarketParams& market) {
    std::vector<std::string> warnings;
    const double y_probe[] = {-1.0, 0.0, 1.0, 2.0};
    const double t_probe[] = {0.0, 0.5 * market.T, market.T};
    bool profit_warned = false;
    bool moment_warned = false;
    for (double t : t_probe) {
        for (double y : y_probe) {
            if (!profit_warned && market.c &&
                premium_rate(principle, claims, t, y, 0.0) <= market.c(t, y)) {
                warnings.push_back(
                    "full-reinsurance premium q(t,y,0) does not exceed the insurance rate "
                    "c(t,y) at (t=" + std::to_string(t) + ", y=" + std::to_string(y) +
                    "): the cedant could lock in a riskless profit");
                profit_warned = true;
            }
            if (!moment_warned && claims.size_family.exponential_rate &&
                claims.size_family.exponential_rate(y) <= 1.0) {
                warnings.push_back(
                    "exponential claim-size rate zeta(y) <= 1 at y=" + std::to_string(y) +
                    ": the e^z-moment admissibility condition fails");
                moment_warned = true;
            }
        }
    }
    return warnings;
}

} // namespace reinsim
