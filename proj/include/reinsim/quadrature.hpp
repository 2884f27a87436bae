#pragma once

#include <functional>

namespace reinsim {

struct QuadratureTolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 48;
};

// Adaptive Simpson integration of f over [a, b]. Throws NumericalError when the
// recursion depth is exhausted before the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureTolerance& tol = {});

// Integral of f over [a, +inf), truncated where successive doublings of the
// upper limit stop contributing relative to the accumulated value.
double adaptive_simpson_to_infinity(const std::function<double(double)>& f, double a,
                                    const QuadratureTolerance& tol = {});

} // namespace reinsim
