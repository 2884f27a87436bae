#pragma once

#include <utility>
#include <vector>

#include "reinsim/claims.hpp"
#include "reinsim/premium.hpp"

namespace reinsim {

struct WealthPath {
    TimeGrid grid;
    std::vector<double> values;                    // length n_steps + 1, values[0] == R0
    std::vector<double> strategy_applied;          // retention per grid node
    std::vector<std::pair<int, double>> claims_hit; // (cell index, retained amount z^alpha)
};

// Wealth via the exact solution of the wealth SDE: premium flow integrated by
// the trapezoid rule on the grid, each claim discounted at its exact arrival
// time. This is the primary evaluator.
WealthPath wealth_closed_form(const MarketParams& market, const PremiumPrinciple& principle,
                              const ClaimsModel& claims_model, const FactorPath& factor,
                              const std::vector<ClaimRecord>& claims,
                              const std::vector<double>& retention);

// Forward Euler on the wealth SDE with claim jumps applied at the end of their
// grid cell. Kept as a first-order test counterpart of the closed form.
WealthPath wealth_euler(const MarketParams& market, const PremiumPrinciple& principle,
                        const ClaimsModel& claims_model, const FactorPath& factor,
                        const std::vector<ClaimRecord>& claims,
                        const std::vector<double>& retention);

struct UtilityValue {
    double value = 0.0;
    bool saturated = false; // e^{-eta x} overflowed for very negative wealth
};

// Exponential utility 1 - e^{-eta x}.
UtilityValue terminal_utility(double x_T, double eta);

} // namespace reinsim
