#include "reinsim/claims.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "reinsim/errors.hpp"

namespace reinsim {

std::vector<ClaimRecord> simulate_claims(const ClaimsModel& model, const FactorPath& path,
                                         RngStream& rng, double majorant_safety) {
    if (majorant_safety < 1.0) throw ConfigError("simulate_claims: majorant_safety must be >= 1");
    std::vector<ClaimRecord> records;
    const TimeGrid& grid = path.grid;
    const double dt = grid.dt();
    if (dt == 0.0) return records;

    for (int i = 0; i < grid.n_steps; ++i) {
        const double t = grid.time(i);
        const double y = path.values[static_cast<std::size_t>(i)];
        const double lambda = model.intensity(t, y);
        if (!std::isfinite(lambda)) {
            throw NumericalError("simulate_claims: non-finite intensity at t=" +
                                 std::to_string(t) + ", y=" + std::to_string(y));
        }
        if (lambda <= 0.0) {
            throw ConfigError("simulate_claims: intensity must be strictly positive at t=" +
                              std::to_string(t) + ", y=" + std::to_string(y));
        }
        // Candidate arrivals from the per-cell majorant, thinned back to the
        // frozen cell intensity (acceptance probability 1 at safety factor 1).
        const double majorant = majorant_safety * lambda;
        const unsigned candidates = rng.poisson(majorant * dt);
        for (unsigned k = 0; k < candidates; ++k) {
            const double u_time = rng.uniform();
            const double u_accept = rng.uniform();
            const double u_size = rng.uniform();
            if (u_accept * majorant > lambda) continue;
            const double arrival = t + u_time * dt;
            records.push_back({arrival, model.size_family.sampler(y, u_size), y});
        }
    }
    std::sort(records.begin(), records.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.arrival_time < b.arrival_time; });
    return records;
}

double conditional_cdf(const ConditionalSizeFamily& family, double z, double y) {
    if (z < 0.0) throw std::domain_error("conditional_cdf: claim size must be >= 0");
    return family.cdf(z, y);
}

double survival_integral(const ConditionalSizeFamily& family,
                         const std::function<double(double)>& weight_derivative,
                         double alpha, double y, const QuadratureTolerance& tol) {
    if (alpha < 0.0) throw std::domain_error("survival_integral: retention must be >= 0");
    if (alpha == 0.0) return 0.0;
    return adaptive_simpson(
        [&](double z) { return weight_derivative(z) * family.survival(z, y); }, 0.0, alpha, tol);
}

double exp_weighted_survival_integral(const ConditionalSizeFamily& family, double k,
                                      double alpha, double y) {
    if (alpha == 0.0) return 0.0;
    if (family.exp_survival_integral) return family.exp_survival_integral(k, alpha, y);
    return survival_integral(family, [k](double z) { return std::exp(k * z); }, alpha, y);
}

double tail_mean(const ConditionalSizeFamily& family, double alpha, double y) {
    if (family.tail_mean) return family.tail_mean(alpha, y);
    // int_alpha^inf z dF = alpha Fbar(alpha) + int_alpha^inf Fbar dz
    return alpha * family.survival(alpha, y) +
           adaptive_simpson_to_infinity([&](double z) { return family.survival(z, y); }, alpha);
}

double ceded_moment(const ConditionalSizeFamily& family, double alpha, double y, int k) {
    if (k != 1 && k != 2) throw std::domain_error("ceded_moment: power must be 1 or 2");
    if (family.ceded_moment) return family.ceded_moment(alpha, y, k);
    if (k == 1) {
        return adaptive_simpson_to_infinity([&](double z) { return family.survival(z, y); }, alpha);
    }
    return 2.0 * adaptive_simpson_to_infinity(
                     [&](double z) { return (z - alpha) * family.survival(z, y); }, alpha);
}

} // namespace reinsim
