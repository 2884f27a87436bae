#include "reinsim/quadrature.hpp"

#include <cmath>

#include "reinsim/errors.hpp"

namespace reinsim {
namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    if (depth >= max_depth) {
        throw NumericalError("adaptive_simpson: tolerance not met at max recursion depth");
    }
    return recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureTolerance& tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    const double eps = std::max(tol.abs_tol, tol.rel_tol * std::abs(whole));
    return recurse(f, a, b, fa, fm, fb, whole, eps, 0, tol.max_depth);
}

double adaptive_simpson_to_infinity(const std::function<double(double)>& f, double a,
                                    const QuadratureTolerance& tol) {
    double total = 0.0;
    double lo = a;
    double width = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double piece = adaptive_simpson(f, lo, lo + width, tol);
        total += piece;
        lo += width;
        width *= 2.0;
        if (std::abs(piece) <= tol.abs_tol + tol.rel_tol * std::abs(total) && i >= 2) {
            return total;
        }
    }
    throw NumericalError("adaptive_simpson_to_infinity: tail did not decay");
}

} // namespace reinsim
