#pragma once

#include <cmath>
#include <functional>

#include "reinsim/presets.hpp"
#include "reinsim/strategy.hpp"

namespace reinsim::testutil {

// Benchmark-model context under the requested principle.
inline PsiContext benchmark_context(PrincipleKind kind, double theta = 0.1) {
    PremiumPrinciple principle =
        kind == PrincipleKind::EVP ? PremiumPrinciple::evp(theta) : PremiumPrinciple::vp(theta);
    return {principle, benchmark_claims_model(), benchmark_market_params(),
            benchmark_factor_model()};
}

// Exhaustive scan argmin of f over [lo, hi] at fixed resolution. Used as the
// independent minimization oracle against closed forms and the root-finder.
inline double grid_search_argmin(const std::function<double(double)>& f, double lo, double hi,
                                 double resolution) {
    double best_x = lo;
    double best_f = f(lo);
    const auto n = static_cast<long>((hi - lo) / resolution);
    for (long i = 1; i <= n; ++i) {
        const double x = lo + resolution * static_cast<double>(i);
        const double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    return best_x;
}

// Two-stage scan with the same final resolution, for convex objectives where a
// full sweep would be wasteful.
inline double grid_search_argmin_refined(const std::function<double(double)>& f, double lo,
                                         double hi, double resolution) {
    const double coarse = std::max(resolution * 1000.0, resolution);
    double x = grid_search_argmin(f, lo, hi, coarse);
    return grid_search_argmin(f, std::max(lo, x - 2.0 * coarse), std::min(hi, x + 2.0 * coarse),
                              resolution);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace reinsim::testutil
