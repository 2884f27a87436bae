#pragma once

#include <vector>

#include "reinsim/premium.hpp"

namespace reinsim {

// Everything needed to evaluate and minimize the pointwise retention objective,
// plus the factor dynamics the valuation estimators simulate under.
struct PsiContext {
    PremiumPrinciple principle;
    ClaimsModel claims;
    MarketParams market;
    FactorModel factor;
};

enum class RetentionRegime { FullReinsurance, InteriorRoot, ClosedFormEVP, ClosedFormVPExp };

struct RetentionDecision {
    double alpha_star = 0.0;
    RetentionRegime regime = RetentionRegime::FullReinsurance;
    double foc_residual = 0.0;       // first-order-condition residual at alpha_star
    bool convexity_certified = true; // false -> uniqueness not certified, warning only
};

// Objective: q(t,y,alpha) + lambda(t,y) int_0^alpha e^{eta z e^{r(T-t)}} Fbar(z,y) dz.
double psi(const PsiContext& ctx, double t, double y, double alpha);

// dPsi/dalpha = dq/dalpha + lambda e^{eta alpha e^{r(T-t)}} Fbar(alpha, y).
double psi_derivative(const PsiContext& ctx, double t, double y, double alpha);

// Full-reinsurance region: -dq/dalpha(t,y,0) <= lambda(t,y). Ties classify as
// full reinsurance.
bool in_A0(const PsiContext& ctx, double t, double y);

// Root of psi_derivative in (0, bracket_max], by doubling-bracket expansion then
// bisection to absolute tolerance 1e-10. Throws NoInteriorRootError when no sign
// change appears up to bracket_max.
double solve_first_order(const PsiContext& ctx, double t, double y, double bracket_max = 1e6);

// Strict second-order condition at an interior stationary point.
bool convexity_certificate(const PsiContext& ctx, double t, double y, double alpha_hat);

// Pointwise minimizer with regime dispatch: A0 -> 0; EVP and VP-with-exponential-
// claims use their closed forms; anything else goes through the root-finder.
RetentionDecision optimal_retention(const PsiContext& ctx, double t, double y);

// optimal_retention applied along a factor path (one value per grid node).
std::vector<double> retention_path(const PsiContext& ctx, const FactorPath& path);

// Rejects configurations the optimizer cannot handle (bounded-support claim
// families) and collects premium-assumption warnings.
std::vector<std::string> validate_context(const PsiContext& ctx);

} // namespace reinsim
