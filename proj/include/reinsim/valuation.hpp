#pragma once

#include <cstdint>
#include <functional>

#include "reinsim/strategy.hpp"
#include "reinsim/wealth.hpp"

namespace reinsim {

enum class ValueMethod { FeynmanKac, DirectUtility };

struct ValueEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_paths = 0;
    ValueMethod method = ValueMethod::FeynmanKac;
    bool overflow_flagged = false; // an exponent exceeded 700 natural-log units
};

using RetentionPolicy = std::function<double(double t, double y)>;

// Value function estimate via the probabilistic representation
//   v(t,x,y) = e^{-eta x e^{r(T-t)}} E[ exp( int_t^T eta e^{r(T-s)}
//              (inf_a Psi^a(s,Y_s) - c(s,Y_s)) ds ) | Y_t = y ].
// The x-dependence is a deterministic prefactor, so estimates at different x
// under the same seed differ by an exact factor.
ValueEstimate value_feynman_kac(const PsiContext& ctx, double t, double x, double y,
                                long n_paths, int n_steps, std::uint64_t seed);

// Direct Monte Carlo of E[e^{-eta X_T}] under the given retention policy,
// simulating factor, claims and wealth from (t, x, y).
ValueEstimate value_direct(const PsiContext& ctx, double t, double x, double y,
                           const RetentionPolicy& policy, long n_paths, int n_steps,
                           std::uint64_t seed);

} // namespace reinsim
