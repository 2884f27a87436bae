#pragma once

#include <string>
#include <vector>

#include "reinsim/config.hpp"
#include "reinsim/csv.hpp"

namespace reinsim {

// Dynamic strategies on the time grid: the deterministic EVP curve next to
// pathwise VP statistics (mean and 5%/95% quantiles) over M simulated factor
// paths. Columns: t, alpha_evp, alpha_vp_mean, alpha_vp_q05, alpha_vp_q95.
CsvTable run_dynamic_strategies(const ExperimentConfig& config);

// Sensitivity of the time-zero retention to one parameter in
// {eta, theta, r, T}. VP is reported at the fixed initial factor value y0.
// Columns: value, alpha0_evp, alpha0_vp_at_y0.
CsvTable run_sweep(const ExperimentConfig& config, const std::string& parameter,
                   const std::vector<double>& values);

// Feynman-Kac value surface at t=0 over a grid of (x, y), VP principle,
// shared seed across all grid points. Columns: x, y, v_estimate, std_error.
CsvTable run_value_surface(const ExperimentConfig& config, const std::vector<double>& xs,
                           const std::vector<double>& ys);

// One simulated scenario under the optimal strategies: factor, retentions and
// wealth per grid node. Columns: t, y, alpha_evp, alpha_vp, x_evp, x_vp.
CsvTable run_scenario(const ExperimentConfig& config);

} // namespace reinsim
