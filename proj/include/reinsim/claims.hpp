#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reinsim/factor.hpp"
#include "reinsim/quadrature.hpp"
#include "reinsim/rng.hpp"

namespace reinsim {

// Conditional claim-size law F(z, y): a distribution family on [0, inf)
// indexed by the factor value y, with the moment primitives the premium and
// retention machinery needs. Closed-form callables override quadrature where
// the family provides them.
struct ConditionalSizeFamily {
    std::string name;

    std::function<double(double z, double y)> cdf;              // F(z,y), F(0,y)=0
    std::function<double(double z, double y)> survival;         // 1 - F
    std::function<double(double z, double y)> survival_density; // dFbar/dz (<= 0)
    std::function<double(double y, double u)> sampler;          // u ~ U[0,1)

    // Integral of z dF(z,y) over [alpha, inf). Null -> quadrature fallback.
    std::function<double(double alpha, double y)> tail_mean;
    // Integral of (z - z^alpha)^k dF(z,y), k in {1, 2}. Null -> quadrature fallback.
    std::function<double(double alpha, double y, int k)> ceded_moment;
    // Closed form for the exponentially weighted survival integral
    // int_0^alpha e^{k z} Fbar(z,y) dz. Null -> quadrature fallback.
    std::function<double(double k, double alpha, double y)> exp_survival_integral;

    // Set for the conditionally exponential family; enables the VP closed form.
    std::function<double(double y)> exponential_rate;

    bool bounded_support = false;
};

struct ClaimsModel {
    CoeffFn intensity; // lambda(t, y) > 0
    ConditionalSizeFamily size_family;
};

struct ClaimRecord {
    double arrival_time;      // in (t0, T]
    double size;              // > 0
    double factor_at_arrival; // factor value at the arrival's grid cell
};

// Arrival simulation by thinning with a per-cell intensity majorant (intensity
// frozen at the cell's left-endpoint factor value, scaled by majorant_safety).
// Records are sorted by arrival time. Throws NumericalError on a non-finite
// intensity, ConfigError on a non-positive one.
std::vector<ClaimRecord> simulate_claims(const ClaimsModel& model, const FactorPath& path,
                                         RngStream& rng, double majorant_safety = 1.0);

// F(z, y); throws std::domain_error for z < 0.
double conditional_cdf(const ConditionalSizeFamily& family, double z, double y);

// int_0^alpha g'(z) Fbar(z,y) dz by adaptive quadrature. Equals
// int_0^inf g(z^alpha) dF(z,y) for any integrable g with g(0) = 0.
double survival_integral(const ConditionalSizeFamily& family,
                         const std::function<double(double)>& weight_derivative,
                         double alpha, double y, const QuadratureTolerance& tol = {});

// int_0^alpha e^{k z} Fbar(z,y) dz; closed form when the family declares one.
double exp_weighted_survival_integral(const ConditionalSizeFamily& family, double k,
                                      double alpha, double y);

// Moment fallbacks (closed form when declared, quadrature otherwise).
double tail_mean(const ConditionalSizeFamily& family, double alpha, double y);
double ceded_moment(const ConditionalSizeFamily& family, double alpha, double y, int k);

} // namespace reinsim
