#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "reinsim/stats.hpp"
#include "reinsim/wealth.hpp"
#include "test_util.hpp"

using namespace reinsim;
using testutil::benchmark_context;

namespace {

// Market with a constant net inflow k: c = k and a premium that is identically
// zero, so c - q == k on every node.
PsiContext flat_market(double r, double k) {
    PsiContext ctx = benchmark_context(PrincipleKind::EVP);
    ctx.market.r = r;
    ctx.market.c = [k](double, double) { return k; };
    ctx.principle = PremiumPrinciple::custom([](double, double, double) { return 0.0; },
                                             [](double, double, double) { return 0.0; });
    return ctx;
}

FactorPath flat_path(const TimeGrid& grid, double y) {
    return {grid, std::vector<double>(static_cast<std::size_t>(grid.n_nodes()), y)};
}

} // namespace

TEST_CASE("no claims, r = 0: linear wealth growth") {
    const PsiContext ctx = flat_market(0.0, 0.25);
    TimeGrid grid(0.0, 4.0, 100);
    const FactorPath path = flat_path(grid, 1.0);
    const std::vector<double> alphas(path.values.size(), 0.5);
    const WealthPath wp =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, {}, alphas);
    CHECK(wp.values.front() == ctx.market.R0);
    for (int i = 0; i <= grid.n_steps; ++i) {
        CHECK(wp.values[static_cast<std::size_t>(i)] ==
              doctest::Approx(ctx.market.R0 + 0.25 * grid.time(i)).epsilon(1e-12));
    }
}

TEST_CASE("no claims, r > 0: exact ODE solution within trapezoid error") {
    const double r = 0.05, k = 0.4;
    const PsiContext ctx = flat_market(r, k);
    TimeGrid grid(0.0, 5.0, 500);
    const FactorPath path = flat_path(grid, 1.0);
    const std::vector<double> alphas(path.values.size(), 0.5);
    const WealthPath wp =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, {}, alphas);
    const double exact = ctx.market.R0 * std::exp(r * 5.0) + k * (std::exp(r * 5.0) - 1.0) / r;
    CHECK(std::abs(wp.values.back() - exact) <= 10.0 * grid.dt() * grid.dt());
}

TEST_CASE("terminal-time claim reduces wealth by exactly its retained amount") {
    const PsiContext ctx = flat_market(0.05, 0.4);
    TimeGrid grid(0.0, 5.0, 100);
    const FactorPath path = flat_path(grid, 1.0);
    const std::vector<double> alphas(path.values.size(), 2.0);
    const std::vector<ClaimRecord> claims = {{5.0, 1.3, 1.0}};
    const WealthPath with =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, claims, alphas);
    const WealthPath without =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, {}, alphas);
    CHECK(with.values.back() == doctest::Approx(without.values.back() - 1.3).epsilon(1e-12));
    CHECK(with.claims_hit.size() == 1);
}

TEST_CASE("zero premium, zero rate, no claims: constant Euler path") {
    const PsiContext ctx = flat_market(0.0, 0.0);
    TimeGrid grid(0.0, 3.0, 60);
    const FactorPath path = flat_path(grid, 0.0);
    const std::vector<double> alphas(path.values.size(), 0.1);
    const WealthPath wp = wealth_euler(ctx.market, ctx.principle, ctx.claims, path, {}, alphas);
    for (double v : wp.values) CHECK(v == ctx.market.R0);
}

TEST_CASE("Euler converges to the closed form at first order") {
    const PsiContext ctx = benchmark_context(PrincipleKind::EVP);
    RunningStat disc_coarse, disc_fine;
    for (long p = 0; p < 50; ++p) {
        TimeGrid coarse(0.0, 5.0, 250);
        TimeGrid fine(0.0, 5.0, 500);
        RngStream frng(41, static_cast<std::uint64_t>(p), 0);
        RngStream crng(41, static_cast<std::uint64_t>(p), 1);
        const FactorPath fine_path = simulate_factor(ctx.factor, fine, frng);
        FactorPath coarse_path{coarse, {}};
        for (std::size_t i = 0; i < fine_path.values.size(); i += 2) {
            coarse_path.values.push_back(fine_path.values[i]);
        }
        const auto claims = simulate_claims(ctx.claims, fine_path, crng);

        const std::pair<const FactorPath*, RunningStat*> runs[] = {{&coarse_path, &disc_coarse},
                                                                   {&fine_path, &disc_fine}};
        for (const auto& run : runs) {
            const FactorPath& path = *run.first;
            const auto alphas = retention_path(ctx, path);
            const WealthPath cf =
                wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, claims, alphas);
            const WealthPath eu =
                wealth_euler(ctx.market, ctx.principle, ctx.claims, path, claims, alphas);
            run.second->add(std::abs(cf.values.back() - eu.values.back()));
        }
    }
    CHECK(disc_coarse.mean() <= 2.0 * (5.0 / 250.0));
    const double ratio = disc_fine.mean() / disc_coarse.mean();
    CHECK(ratio >= 0.3);
    CHECK(ratio <= 0.7);
}

TEST_CASE("raising every retention never shrinks the deduction term") {
    const PsiContext ctx = benchmark_context(PrincipleKind::EVP);
    TimeGrid grid(0.0, 5.0, 100);
    RngStream frng(43, 0, 0);
    RngStream crng(43, 0, 1);
    const FactorPath path = simulate_factor(ctx.factor, grid, frng);
    auto claims = simulate_claims(ctx.claims, path, crng);
    claims.push_back({2.0, 0.8, path.values[40]});
    std::sort(claims.begin(), claims.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.arrival_time < b.arrival_time; });

    const std::vector<double> lo(path.values.size(), 0.1);
    const std::vector<double> hi(path.values.size(), 0.4);
    const WealthPath wlo =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, claims, lo);
    const WealthPath whi =
        wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, claims, hi);
    double ded_lo = 0.0, ded_hi = 0.0;
    for (const auto& [cell, amount] : wlo.claims_hit) ded_lo += amount;
    for (const auto& [cell, amount] : whi.claims_hit) ded_hi += amount;
    CHECK(ded_hi >= ded_lo);
}

TEST_CASE("terminal utility values and saturation") {
    CHECK(terminal_utility(0.0, 0.5).value == 0.0);
    CHECK(terminal_utility(2.0, 0.5).value == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK_FALSE(terminal_utility(2.0, 0.5).saturated);
    const UtilityValue sat = terminal_utility(-2000.0, 0.5);
    CHECK(sat.saturated);
    CHECK(sat.value < -1e290);
    double prev = terminal_utility(-5.0, 0.5).value;
    for (double x = -4.0; x <= 5.0; x += 0.5) {
        const double u = terminal_utility(x, 0.5).value;
        CHECK(u > prev);
        prev = u;
    }
}

TEST_CASE("maximizing utility and minimizing e^{-eta x} pick the same candidate") {
    const PsiContext ctx = benchmark_context(PrincipleKind::EVP);
    TimeGrid grid(0.0, 5.0, 100);
    const double candidates[] = {0.0, 0.1, 0.148456, 0.3, 1.0};
    double best_util = -1e308, best_exp = 1e308;
    int argmax_util = -1, argmin_exp = -1;
    for (int k = 0; k < 5; ++k) {
        RunningStat util, expneg;
        for (long p = 0; p < 200; ++p) {
            RngStream frng(47, static_cast<std::uint64_t>(p), 0);
            RngStream crng(47, static_cast<std::uint64_t>(p), 1);
            const FactorPath path = simulate_factor(ctx.factor, grid, frng);
            const auto claims = simulate_claims(ctx.claims, path, crng);
            const std::vector<double> alphas(path.values.size(), candidates[k]);
            const WealthPath wp =
                wealth_closed_form(ctx.market, ctx.principle, ctx.claims, path, claims, alphas);
            util.add(terminal_utility(wp.values.back(), ctx.market.eta).value);
            expneg.add(std::exp(-ctx.market.eta * wp.values.back()));
        }
        // sup E[1 - e^{-eta X}] = 1 - inf E[e^{-eta X}] holds exactly on sample means.
        CHECK(util.mean() == doctest::Approx(1.0 - expneg.mean()).epsilon(1e-12));
        if (util.mean() > best_util) { best_util = util.mean(); argmax_util = k; }
        if (expneg.mean() < best_exp) { best_exp = expneg.mean(); argmin_exp = k; }
    }
    CHECK(argmax_util == argmin_exp);
}
