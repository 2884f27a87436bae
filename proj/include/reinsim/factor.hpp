#pragma once

#include <functional>
#include <vector>

#include "reinsim/rng.hpp"

namespace reinsim {

// Coefficient function of (t, y).
using CoeffFn = std::function<double(double, double)>;

// Diffusion model for the environmental factor: dY = drift dt + diffusion dW.
// The drift/diffusion integrability conditions required for a strong solution
// are the caller's obligation; they cannot be checked mechanically.
struct FactorModel {
    CoeffFn drift;
    CoeffFn diffusion; // must be >= 0 wherever sampled
    double y0 = 0.0;
};

// Uniform discretization of [t0, T].
struct TimeGrid {
    TimeGrid(double t0_, double T_, int n_steps_);

    double t0;
    double T;
    int n_steps;

    double dt() const { return (T - t0) / n_steps; }
    double time(int i) const { return t0 + dt() * i; }
    int n_nodes() const { return n_steps + 1; }
};

struct FactorPath {
    TimeGrid grid;
    std::vector<double> values; // length n_steps + 1, values[0] == y0
};

// One explicit Euler update: y + b(t,y) dt + gamma(t,y) sqrt(dt) noise.
// Throws NumericalError when the result is non-finite.
double euler_step(const FactorModel& model, double t, double y, double dt, double noise);

// Euler path on the grid; deterministic given the stream state.
FactorPath simulate_factor(const FactorModel& model, const TimeGrid& grid, RngStream& rng);

} // namespace reinsim
