#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reinsim/strategy.hpp"

namespace reinsim {

// Flat scalar configuration of an experiment. Defaults are the benchmark
// simulation parameters: c=1, T=5, eta=0.5, theta=0.1, r=0.05, N=500, M=5000.
struct ExperimentConfig {
    double c = 1.0;
    double T = 5.0;
    double eta = 0.5;
    double theta = 0.1;
    double r = 0.05;
    double R0 = 1.0;
    double factor_b = 0.3;
    double factor_gamma = 0.3;
    double y0 = 1.0;
    double lambda0 = 0.1;
    int n_steps = 500;   // N
    long n_paths = 5000; // M
    std::uint64_t seed = 1;

    std::vector<std::string> warnings; // attached by the validator

    MarketParams market() const;
    ClaimsModel claims() const;
    FactorModel factor() const;
    PsiContext context(PrincipleKind kind) const;

    // Resolved key=value view in a fixed order, for the CSV comment header.
    std::vector<std::pair<std::string, std::string>> resolved() const;
};

// Parse a key = value config file (dotted keys, '#' comments, blank lines
// allowed) and apply key=value overrides on top. An empty path yields pure
// defaults. Unknown keys, non-numeric values, N < 1 or M < 1 raise ConfigError
// naming the key. Validator warnings are attached to the result.
ExperimentConfig load_config(const std::string& path,
                             const std::vector<std::string>& overrides = {});

} // namespace reinsim
