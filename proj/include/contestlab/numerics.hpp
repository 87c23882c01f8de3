#pragma once

#include <functional>
#include <vector>

namespace contestlab {

// Adaptive Simpson quadrature of f over [a, b].
// Splits until the Richardson error estimate of a piece is below its share of
// abs_tol; throws NumericalError once more than max_evals function evaluations
// have been spent.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-9, long max_evals = 1000000);

// Bisection for a sign change bracketed by [a, b] (fa = f(a), fb = f(b),
// fa * fb <= 0). Runs until the bracket is narrower than x_tol or 200 steps.
double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              double fb, double x_tol = 1e-12);

// All zeros of f on [a, b] found by a sign scan over grid_points equally
// spaced samples. Sign changes are refined by bisection; local minima of |f|
// that dip below touch_tol without a sign change are refined by ternary
// search and reported as touch points (even-order roots).
struct RootScan {
    std::vector<double> roots;        // sign-change roots, ascending
    std::vector<double> touch_points; // |f| <= touch_tol without sign change
    double grid_step = 0.0;
};
RootScan find_roots(const std::function<double(double)>& f, double a, double b,
                    int grid_points = 2048, double x_tol = 1e-12,
                    double touch_tol = 1e-9);

// Symmetric difference quotient with step h (clipped to keep x +- h inside
// [lo, hi] by falling back to a one-sided quotient at the edges).
double central_difference(const std::function<double(double)>& f, double x, double h = 1e-6,
                          double lo = 0.0, double hi = 1.0);

// Row n of Pascal's triangle: row[k] = C(n, k). Exact in double up to n = 57.
std::vector<double> binomial_row(int n);

// Sum in a fixed pairwise (binary tree) order, independent of how the values
// were produced. Used to make threaded accumulations bit-reproducible.
double pairwise_sum(const std::vector<double>& values);

}  // namespace contestlab
