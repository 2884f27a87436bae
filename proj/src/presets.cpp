#include "reinsim/presets.hpp"

#include <cmath>
#include <utility>

namespace reinsim {

ConditionalSizeFamily exponential_family(std::function<double(double)> zeta) {
    ConditionalSizeFamily f;
    f.name = "exponential";
    auto rate = std::move(zeta);
    f.cdf = [rate](double z, double y) { return z <= 0.0 ? 0.0 : 1.0 - std::exp(-rate(y) * z); };
    f.survival = [rate](double z, double y) { return z <= 0.0 ? 1.0 : std::exp(-rate(y) * z); };
    f.survival_density = [rate](double z, double y) {
        const double zt = rate(y);
        return -zt * std::exp(-zt * z);
    };
    f.sampler = [rate](double y, double u) { return -std::log1p(-u) / rate(y); };
    f.tail_mean = [rate](double alpha, double y) {
        const double zt = rate(y);
        return std::exp(-zt * alpha) * (alpha + 1.0 / zt);
    };
    f.ceded_moment = [rate](double alpha, double y, int k) {
        const double zt = rate(y);
        const double tail = std::exp(-zt * alpha);
        return k == 1 ? tail / zt : 2.0 * tail / (zt * zt);
    };
    f.exp_survival_integral = [rate](double k, double alpha, double y) {
        const double d = rate(y) - k;
        if (std::abs(d) < 1e-12) return alpha;
        return (1.0 - std::exp(-d * alpha)) / d;
    };
    f.exponential_rate = rate;
    return f;
}

ConditionalSizeFamily pareto_family(double sigma, std::function<double(double)> shape) {
    ConditionalSizeFamily f;
    f.name = "pareto";
    auto a = std::move(shape);
    f.cdf = [sigma, a](double z, double y) {
        return z <= 0.0 ? 0.0 : 1.0 - std::pow(1.0 + z / sigma, -a(y));
    };
    f.survival = [sigma, a](double z, double y) {
        return z <= 0.0 ? 1.0 : std::pow(1.0 + z / sigma, -a(y));
    };
    f.survival_density = [sigma, a](double z, double y) {
        const double ay = a(y);
        return -(ay / sigma) * std::pow(1.0 + z / sigma, -ay - 1.0);
    };
    f.sampler = [sigma, a](double y, double u) {
        return sigma * (std::pow(1.0 - u, -1.0 / a(y)) - 1.0);
    };
    f.tail_mean = [sigma, a](double alpha, double y) {
        const double ay = a(y);
        const double sv = std::pow(1.0 + alpha / sigma, -ay);
        return alpha * sv + sigma * std::pow(1.0 + alpha / sigma, 1.0 - ay) / (ay - 1.0);
    };
    f.ceded_moment = [sigma, a](double alpha, double y, int k) {
        const double ay = a(y);
        if (k == 1) return sigma * std::pow(1.0 + alpha / sigma, 1.0 - ay) / (ay - 1.0);
        return 2.0 * sigma * sigma * std::pow(1.0 + alpha / sigma, 2.0 - ay) /
               ((ay - 1.0) * (ay - 2.0));
    };
    return f;
}

FactorModel benchmark_factor_model(double b, double gamma, double y0) {
    return {[b](double, double) { return b; }, [gamma](double, double) { return gamma; }, y0};
}

ConditionalSizeFamily benchmark_exponential_family() {
    return exponential_family([](double y) { return std::exp(y) + 1.0; });
}

ClaimsModel benchmark_claims_model(double lambda0) {
    return {[lambda0](double, double y) { return lambda0 * std::exp(0.5 * y); },
            benchmark_exponential_family()};
}

MarketParams benchmark_market_params() {
    MarketParams m;
    m.r = 0.05;
    m.eta = 0.5;
    m.T = 5.0;
    m.c = [](double, double) { return 1.0; };
    m.R0 = 1.0;
    return m;
}

} // namespace reinsim
