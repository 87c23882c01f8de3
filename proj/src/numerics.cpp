#include "contestlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "contestlab/errors.hpp"

namespace contestlab {

namespace {

struct QuadBudget {
    long remaining;
    void spend(long k) {
        remaining -= k;
        if (remaining < 0) throw NumericalError("quadrature evaluation budget exhausted");
    }
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth,
                     QuadBudget& budget) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    budget.spend(2);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    // Richardson: |delta|/15 estimates the error of left+right.
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, long max_evals) {
    if (a == b) return 0.0;
    QuadBudget budget{max_evals};
    budget.spend(3);
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw NumericalError("non-finite integrand");
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_step(f, a, b, fa, fm, fb, whole, abs_tol, 52, budget);
}

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double fb,
              double x_tol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw NumericalError("bisection bracket has no sign change");
    for (int i = 0; i < 200 && b - a > x_tol; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // bracket at floating-point resolution
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

RootScan find_roots(const std::function<double(double)>& f, double a, double b, int grid_points,
                    double x_tol, double touch_tol) {
    if (grid_points < 2) throw ValidationError("root scan needs at least 2 grid points");
    RootScan scan;
    const int n = grid_points;
    scan.grid_step = (b - a) / (n - 1);
    std::vector<double> xs(n), fs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * i / (n - 1);
        fs[i] = f(xs[i]);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (fs[i] == 0.0) {
            if (i > 0) scan.roots.push_back(xs[i]);  // endpoints are the caller's business
            continue;
        }
        if (fs[i + 1] == 0.0) continue;  // owned by the next iteration
        if ((fs[i] > 0.0) != (fs[i + 1] > 0.0))
            scan.roots.push_back(bisect(f, xs[i], xs[i + 1], fs[i], fs[i + 1], x_tol));
    }
    // Even-order roots: a local minimum of |f| that reaches ~0 with no sign
    // change around it. Refine by ternary search on f^2.
    for (int i = 1; i + 1 < n; ++i) {
        const double ai = std::abs(fs[i]);
        if (ai > std::abs(fs[i - 1]) || ai > std::abs(fs[i + 1])) continue;
        if ((fs[i - 1] > 0.0) != (fs[i + 1] > 0.0)) continue;  // handled by the sign scan
        if (ai > 1e6 * touch_tol) continue;                    // nowhere near zero
        double lo = xs[i - 1], hi = xs[i + 1];
        for (int it = 0; it < 160 && hi - lo > x_tol; ++it) {
            const double p = lo + (hi - lo) / 3.0;
            const double q = hi - (hi - lo) / 3.0;
            if (std::abs(f(p)) <= std::abs(f(q)))
                hi = q;
            else
                lo = p;
        }
        const double x = 0.5 * (lo + hi);
        if (std::abs(f(x)) <= touch_tol) scan.touch_points.push_back(x);
    }
    std::sort(scan.roots.begin(), scan.roots.end());
    scan.roots.erase(std::unique(scan.roots.begin(), scan.roots.end(),
                                 [&](double x, double y) { return std::abs(x - y) < x_tol; }),
                     scan.roots.end());
    return scan;
}

double central_difference(const std::function<double(double)>& f, double x, double h, double lo,
                          double hi) {
    const double left = std::max(lo, x - h);
    const double right = std::min(hi, x + h);
    return (f(right) - f(left)) / (right - left);
}

std::vector<double> binomial_row(int n) {
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

double pairwise_sum(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::vector<double> level(values);
    while (level.size() > 1) {
        std::vector<double> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level.swap(next);
    }
    return level[0];
}

}  // namespace contestlab
