#pragma once

#include <functional>

#include "reinsim/claims.hpp"
#include "reinsim/premium.hpp"

namespace reinsim {

// Conditionally exponential claim sizes: F(z,y) = 1 - e^{-zeta(y) z}. All
// moment primitives are closed form. The e^z-moment admissibility condition
// requires zeta(y) > 1 (warned about at validation, not enforced).
ConditionalSizeFamily exponential_family(std::function<double(double)> zeta);

// Lomax (Pareto type II) claim sizes with scale sigma and factor-dependent
// shape a(y): Fbar(z,y) = (1 + z/sigma)^{-a(y)}. Heavy-tailed in the sense that
// every exponential moment diverges; second ceded moment needs a(y) > 2.
ConditionalSizeFamily pareto_family(double sigma, std::function<double(double)> shape);

// The benchmark model instance used throughout the experiment harness:
//   dY = 0.3 dt + 0.3 dW, Y0 = 1
//   lambda(t,y) = lambda0 e^{y/2}
//   zeta(y) = e^y + 1
//   c = 1, T = 5, eta = 0.5, r = 0.05, R0 = 1.
FactorModel benchmark_factor_model(double b = 0.3, double gamma = 0.3, double y0 = 1.0);
ConditionalSizeFamily benchmark_exponential_family();
ClaimsModel benchmark_claims_model(double lambda0 = 0.1);
MarketParams benchmark_market_params();

} // namespace reinsim
