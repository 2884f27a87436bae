#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reinsim/claims.hpp"

namespace reinsim {

enum class PrincipleKind { EVP, VP, Custom };

// Reinsurance premium principle. EVP loads expected ceded losses, VP adds a
// variance-type term; custom principles plug in as callables of (t, y, alpha).
struct PremiumPrinciple {
    PrincipleKind kind = PrincipleKind::EVP;
    double theta = 0.0; // safety loading, >= 0

    std::function<double(double, double, double)> custom_rate;
    std::function<double(double, double, double)> custom_derivative;
    std::function<double(double, double, double)> custom_second_derivative; // optional

    static PremiumPrinciple evp(double theta);
    static PremiumPrinciple vp(double theta);
    static PremiumPrinciple custom(std::function<double(double, double, double)> rate,
                                   std::function<double(double, double, double)> derivative,
                                   std::function<double(double, double, double)> second = {});
};

struct MarketParams {
    double r = 0.0;   // risk-free rate, sign-unrestricted
    double eta = 1.0; // risk aversion, > 0
    double T = 1.0;   // horizon, > 0
    CoeffFn c;        // insurance premium rate c(t, y) >= 0
    double R0 = 1.0;  // initial wealth, > 0
};

// Reinsurance premium rate q(t, y, alpha).
double premium_rate(const PremiumPrinciple& principle, const ClaimsModel& claims,
                    double t, double y, double alpha);

// dq/dalpha, analytic for EVP/VP, central difference for custom principles
// lacking a supplied derivative. Always <= 0 for admissible premia.
double premium_derivative(const PremiumPrinciple& principle, const ClaimsModel& claims,
                          double t, double y, double alpha);

// d2q/dalpha2, analytic for EVP/VP, central difference of the derivative otherwise.
double premium_second_derivative(const PremiumPrinciple& principle, const ClaimsModel& claims,
                                 double t, double y, double alpha);

// Model-admissibility warnings sampled on a small (t, y) grid: the no-riskless-
// profit condition q(t,y,0) > c(t,y) and the exponential-moment condition for
// the exponential family (rate > 1). Violations warn, they do not fail.
std::vector<std::string> validate_assumptions(const PremiumPrinciple& principle,
                                              const ClaimsModel& claims,
                                              const MarketParams& market);

} // namespace reinsim
