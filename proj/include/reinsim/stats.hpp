#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace reinsim {

// Streaming (mean, M2, count) accumulator with a commutative merge, so
// parallel partial results combine independently of completion order.
class RunningStat {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }

    void merge(const RunningStat& other) {
        if (other.n_ == 0) return;
        if (n_ == 0) { *this = other; return; }
        const double na = static_cast<double>(n_);
        const double nb = static_cast<double>(other.n_);
        const double d = other.mean_ - mean_;
        mean_ += d * nb / (na + nb);
        m2_ += other.m2_ + d * d * na * nb / (na + nb);
        n_ += other.n_;
    }

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double std_dev() const { return std::sqrt(variance()); }
    double std_error() const {
        return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

inline double quantile(std::vector<double> xs, double p) {
    if (xs.empty()) return 0.0;
    const double pos = p * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, xs.size() - 1);
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(lo), xs.end());
    const double xlo = xs[lo];
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(hi), xs.end());
    const double xhi = xs[hi];
    return xlo + (pos - static_cast<double>(lo)) * (xhi - xlo);
}

// Two-sided Kolmogorov-Smirnov statistic against Uniform(0,1).
inline double ks_uniform_statistic(std::vector<double> u) {
    std::sort(u.begin(), u.end());
    const auto n = static_cast<double>(u.size());
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double cdf_lo = static_cast<double>(i) / n;
        const double cdf_hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(u[i] - cdf_lo, cdf_hi - u[i]));
    }
    return d;
}

// Stephens' finite-sample adjustment; compare against the asymptotic critical
// value of the chosen significance (1.6276 at 0.01, 1.3581 at 0.05).
inline double ks_adjusted_statistic(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    return d * (sn + 0.12 + 0.11 / sn);
}

inline constexpr double kKsCritical01 = 1.6276;

} // namespace reinsim
