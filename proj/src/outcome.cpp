#include "contestlab/outcome.hpp"

#include <algorithm>
#include <cmath>

#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

namespace {

// integral_a^b g(theta) dF(theta) rewritten over the percentile u = F(theta):
// the integrand g(quantile(u)) stays bounded even when the density does not.
double integrate_dF(const TypeDistribution& F, const std::function<double(double)>& g, double a,
                    double b, double tol) {
    const double ua = F.cdf(a);
    const double ub = F.cdf(b);
    if (ub <= ua) return 0.0;
    return integrate_adaptive([&](double u) { return g(F.quantile(u)); }, ua, ub, tol);
}

}  // namespace

double societal_cost(double s, const TypeDistribution& F, const CostFunction& c, double tol) {
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("cutoff s must lie in [0, 1]");
    if (s == 0.0) return 0.0;
    return integrate_dF(F, [&](double t) { return c(t); }, 0.0, s, tol);
}

double selection_efficiency(double s, const ContestConfig& config, const TypeDistribution& F,
                            const CostFunction& c, double tol) {
    config.validate();
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("cutoff s must lie in [0, 1]");
    if (s == 0.0 || s == 1.0) return 0.0;  // everyone acts alike: selection is blind
    const double mu = F.mean();
    const double advantage = integrate_dF(F, [&](double t) { return mu - t; }, 0.0, s, tol);
    return config.n * c(s) / (config.m * mu) * advantage;
}

double cost_elasticity(double s, const TypeDistribution& F, const CostFunction& c) {
    const double num = c.derivative(s) * F.cdf(s);
    const double den = c(s) * F.pdf(s);
    if (den == 0.0) {
        if (num == 0.0 && s < 1e-4) {
            // 0/0 at the bottom of the type space: use the right-limit proxy.
            const double num2 = c.derivative(1e-4) * F.cdf(1e-4);
            const double den2 = c(1e-4) * F.pdf(1e-4);
            if (den2 != 0.0) return num2 / den2;
        }
        throw NumericalError("cost elasticity undefined: c(s)*f(s) = 0");
    }
    return num / den;
}

double budget_derivative(double s, const ContestConfig& config, const TypeDistribution& F,
                         const CostFunction& c, DerivativeInfo* info) {
    config.validate();
    if (!(s > 0.0 && s < 1.0)) throw ValidationError("budget derivative needs s in (0, 1)");
    if (c(s) == 0.0 || F.pdf(s) == 0.0)
        throw NumericalError("budget derivative undefined: c(s) = 0 or f(s) = 0");
    const double mu = F.mean();
    const double Fs = F.cdf(s);
    const double mean_below = integrate_dF(F, [](double t) { return t; }, 0.0, s, 1e-10) / Fs;
    const auto slope_with = [&](double cprime) {
        const double eps = cprime * Fs / (c(s) * F.pdf(s));
        return config.n / (config.m * mu) * ((mu - s) + eps * (mu - mean_below));
    };

    const auto& kinks = c.kink_points();
    const bool at_kink = std::any_of(kinks.begin(), kinks.end(),
                                     [&](double k) { return std::abs(k - s) < 1e-9; });
    if (at_kink) {
        const double h = 1e-6;
        const double left = slope_with((c(s) - c(std::max(0.0, s - h))) / h);
        const double right = slope_with((c(std::min(1.0, s + h)) - c(s)) / h);
        if (info) *info = {left, right, std::abs(left - right) > 1e-6 * (1.0 + std::abs(left))};
        return 0.5 * (left + right);
    }
    const double value = slope_with(c.derivative(s));
    if (info) *info = {value, value, false};
    return value;
}

FrontierCurve::FrontierCurve(std::vector<FrontierSample> samples,
                             std::function<double(double)> cost_of_s,
                             std::function<double(double)> eta_of_s)
    : samples_(std::move(samples)), cost_of_s_(std::move(cost_of_s)), eta_of_s_(std::move(eta_of_s)) {}

double FrontierCurve::inverse_cost(double target) const {
    if (target <= samples_.front().C) return samples_.front().s;
    if (target >= samples_.back().C) return samples_.back().s;
    auto it = std::lower_bound(samples_.begin(), samples_.end(), target,
                               [](const FrontierSample& a, double t) { return a.C < t; });
    double hi = it->s;
    double lo = std::prev(it)->s;
    return bisect([&](double s) { return cost_of_s_(s) - target; }, lo, hi,
                  std::prev(it)->C - target, it->C - target, 1e-12);
}

FrontierCurve frontier(const ContestConfig& config, const TypeDistribution& F,
                       const CostFunction& c, int grid_size) {
    config.validate();
    if (grid_size < 2) throw ValidationError("frontier needs grid_size >= 2");
    const double mu = F.mean();
    const double scale = config.n / (config.m * mu);

    // March the grid accumulating both integrals piece by piece; each piece
    // is cheap for the adaptive rule because it is nearly linear.
    std::vector<double> s_grid(grid_size);
    for (int i = 0; i < grid_size; ++i) s_grid[i] = static_cast<double>(i) / (grid_size - 1);
    std::vector<FrontierSample> samples;
    samples.reserve(s_grid.size());
    double cost_acc = 0.0, adv_acc = 0.0;
    samples.push_back({0.0, 0.0, 0.0});
    for (std::size_t i = 1; i < s_grid.size(); ++i) {
        const double a = s_grid[i - 1], b = s_grid[i];
        cost_acc += integrate_dF(F, [&](double t) { return c(t); }, a, b, 1e-12);
        adv_acc += integrate_dF(F, [&](double t) { return mu - t; }, a, b, 1e-12);
        const double eta = (b >= 1.0) ? 0.0 : scale * c(b) * adv_acc;
        samples.push_back({b, cost_acc, eta});
    }

    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].C > samples[i - 1].C))
            throw NumericalError("societal cost is not strictly increasing in the cutoff");
    }

    auto cost_of_s = [F, c](double s) { return societal_cost(s, F, c, 1e-10); };
    auto eta_of_s = [config, F, c](double s) {
        return selection_efficiency(s, config, F, c, 1e-10);
    };

    // Local refinement: split any step whose eta jump exceeds 1e-3.
    std::vector<FrontierSample> refined;
    refined.reserve(samples.size());
    refined.push_back(samples.front());
    for (std::size_t i = 1; i < samples.size(); ++i) {
        std::vector<FrontierSample> stack{samples[i]};
        while (!stack.empty()) {
            const FrontierSample next = stack.back();
            const FrontierSample& prev = refined.back();
            if (std::abs(next.eta - prev.eta) > 1e-3 && next.s - prev.s > 1e-7) {
                const double mid = 0.5 * (prev.s + next.s);
                stack.push_back({mid, cost_of_s(mid), eta_of_s(mid)});
            } else {
                refined.push_back(next);
                stack.pop_back();
            }
        }
    }
    return FrontierCurve(std::move(refined), cost_of_s, eta_of_s);
}

}  // namespace contestlab
