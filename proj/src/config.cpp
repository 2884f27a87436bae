#include "reinsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "reinsim/errors.hpp"
#include "reinsim/presets.hpp"

namespace reinsim {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: non-numeric value '" + value + "' for key '" + key + "'");
    }
    if (pos != value.size() || !std::isfinite(v)) {
        throw ConfigError("config: non-numeric value '" + value + "' for key '" + key + "'");
    }
    return v;
}

// Dotted keys are canonical; common bare aliases are accepted.
std::string canonical_key(const std::string& key) {
    if (key == "c") return "market.c";
    if (key == "T") return "market.T";
    if (key == "eta") return "market.eta";
    if (key == "r") return "market.r";
    if (key == "R0") return "market.R0";
    if (key == "theta") return "principle.theta";
    if (key == "lambda0") return "claims.lambda0";
    if (key == "y0") return "factor.y0";
    if (key == "N") return "grid.N";
    if (key == "M") return "mc.M";
    return key;
}

void apply(ExperimentConfig& cfg, const std::string& raw_key, const std::string& value) {
    const std::string key = canonical_key(raw_key);
    const double v = parse_number(key, value);
    if (key == "market.c") cfg.c = v;
    else if (key == "market.T") cfg.T = v;
    else if (key == "market.eta") cfg.eta = v;
    else if (key == "market.r") cfg.r = v;
    else if (key == "market.R0") cfg.R0 = v;
    else if (key == "principle.theta") cfg.theta = v;
    else if (key == "claims.lambda0") cfg.lambda0 = v;
    else if (key == "factor.b") cfg.factor_b = v;
    else if (key == "factor.gamma") cfg.factor_gamma = v;
    else if (key == "factor.y0") cfg.y0 = v;
    else if (key == "grid.N") {
        if (v < 1.0) throw ConfigError("config: grid.N must be >= 1");
        cfg.n_steps = static_cast<int>(v);
    } else if (key == "mc.M") {
        if (v < 1.0) throw ConfigError("config: mc.M must be >= 1");
        cfg.n_paths = static_cast<long>(v);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(v);
    } else {
        throw ConfigError("config: unknown key '" + raw_key + "'");
    }
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

MarketParams ExperimentConfig::market() const {
    MarketParams m;
    m.r = r;
    m.eta = eta;
    m.T = T;
    const double rate = c;
    m.c = [rate](double, double) { return rate; };
    m.R0 = R0;
    return m;
}

ClaimsModel ExperimentConfig::claims() const { return benchmark_claims_model(lambda0); }

FactorModel ExperimentConfig::factor() const {
    return benchmark_factor_model(factor_b, factor_gamma, y0);
}

PsiContext ExperimentConfig::context(PrincipleKind kind) const {
    PremiumPrinciple principle = kind == PrincipleKind::EVP ? PremiumPrinciple::evp(theta)
                                                            : PremiumPrinciple::vp(theta);
    return {principle, claims(), market(), factor()};
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const {
    return {
        {"market.c", format_number(c)},
        {"market.T", format_number(T)},
        {"market.eta", format_number(eta)},
        {"market.r", format_number(r)},
        {"market.R0", format_number(R0)},
        {"principle.theta", format_number(theta)},
        {"claims.lambda0", format_number(lambda0)},
        {"factor.b", format_number(factor_b)},
        {"factor.gamma", format_number(factor_gamma)},
        {"factor.y0", format_number(y0)},
        {"grid.N", std::to_string(n_steps)},
        {"mc.M", std::to_string(n_paths)},
        {"seed", std::to_string(seed)},
    };
}

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    ExperimentConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("config: cannot open file '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("config: expected 'key = value', got '" + line + "'");
            }
            apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: override must be key=value, got '" + ov + "'");
        }
        apply(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
    }
    cfg.warnings = validate_context(cfg.context(PrincipleKind::EVP));
    for (const auto& w : validate_context(cfg.context(PrincipleKind::VP))) {
        if (std::find(cfg.warnings.begin(), cfg.warnings.end(), w) == cfg.warnings.end()) {
            cfg.warnings.push_back(w);
        }
    }
    return cfg;
}

} // namespace reinsim
