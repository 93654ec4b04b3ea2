#pragma once

// Small numerical kernels shared by the geometry modules: adaptive Simpson
// quadrature, grid + golden-section maximization and central differences.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>

#include "lorentzkit/error.hpp"

namespace lorentzkit::numeric {

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] (a > b gives the negated integral).
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    if (a == b) return 0.0;
    if (a > b) return -adaptive_simpson(f, b, a, tol, max_depth);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double result = detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
    if (!std::isfinite(result)) fail(ErrorKind::Numerical, "quadrature produced a non-finite value");
    return result;
}

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Maximizes a unimodal f on [lo, hi] by golden-section search.
template <class F>
Extremum golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-10,
                                 int max_iter = 500) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

/// Coarse grid scan followed by golden-section refinement in the bracketing cell pair.
template <class F>
Extremum grid_then_golden_maximize(F&& f, double lo, double hi, std::size_t grid = 2000,
                                   double x_tol = 1e-10) {
    if (!(hi > lo) || grid < 3) fail(ErrorKind::Domain, "empty maximization interval");
    const double dx = (hi - lo) / static_cast<double>(grid - 1);
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid; ++i) {
        const double v = f(lo + dx * static_cast<double>(i));
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = lo + dx * static_cast<double>(best == 0 ? 0 : best - 1);
    const double b = lo + dx * static_cast<double>(best + 1 >= grid ? grid - 1 : best + 1);
    return golden_section_maximize(f, a, b, x_tol);
}

/// Second-order central difference.
template <class F>
double central_difference(F&& f, double x, double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

/// Fourth-order five-point central difference.
template <class F>
double five_point_difference(F&& f, double x, double step) {
    return (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) - f(x + 2.0 * step)) / (12.0 * step);
}

} // namespace lorentzkit::numeric
