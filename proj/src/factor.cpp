#include "reinsim/factor.hpp"

#include <cmath>
#include <string>

#include "reinsim/errors.hpp"

namespace reinsim {

TimeGrid::TimeGrid(double t0_, double T_, int n_steps_) : t0(t0_), T(T_), n_steps(n_steps_) {
    if (!(T >= t0)) throw ConfigError("TimeGrid: horizon T must not precede t0");
    if (n_steps < 1) throw ConfigError("TimeGrid: n_steps must be >= 1");
}

double euler_step(const FactorModel& model, double t, double y, double dt, double noise) {
    const double next = y + model.drift(t, y) * dt + model.diffusion(t, y) * std::sqrt(dt) * noise;
    if (!std::isfinite(next)) {
        throw NumericalError("euler_step: numerical blow-up at t=" + std::to_string(t) +
                             ", y=" + std::to_string(y));
    }
    return next;
}

FactorPath simulate_factor(const FactorModel& model, const TimeGrid& grid, RngStream& rng) {
    FactorPath path{grid, {}};
    path.values.reserve(grid.n_nodes());
    path.values.push_back(model.y0);
    const double dt = grid.dt();
    double y = model.y0;
    for (int i = 0; i < grid.n_steps; ++i) {
        y = euler_step(model, grid.time(i), y, dt, rng.normal());
        path.values.push_back(y);
    }
    return path;
}

} // namespace reinsim
