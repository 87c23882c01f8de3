#include "contestlab/cost.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

CostFunction CostFunction::affine(double a, double b) {
    if (!(a > 0.0)) throw ValidationError("affine cost needs slope a > 0");
    if (!(b >= 0.0)) throw ValidationError("affine cost needs intercept b >= 0");
    CostFunction c;
    c.kind_ = "affine";
    c.value_ = [a, b](double x) { return a * clamp01(x) + b; };
    c.inverse_ = [a, b](double y) { return clamp01((y - b) / a); };
    c.derivative_ = [a](double) { return a; };
    return c;
}

CostFunction CostFunction::power(double gamma, double eps, const TypeDistribution& F) {
    if (!(gamma > 0.0)) throw ValidationError("power cost needs gamma > 0");
    if (!(eps > 0.0)) throw ValidationError("power cost needs eps > 0");
    CostFunction c;
    c.kind_ = "power";
    c.value_ = [gamma, eps, F](double x) { return gamma * std::pow(F.cdf(clamp01(x)), eps); };
    c.inverse_ = [gamma, eps, F](double y) {
        if (y <= 0.0) return 0.0;
        if (y >= gamma) return 1.0;
        return F.quantile(std::pow(y / gamma, 1.0 / eps));
    };
    c.derivative_ = [gamma, eps, F](double x) {
        x = clamp01(x);
        return gamma * eps * std::pow(F.cdf(x), eps - 1.0) * F.pdf(x);
    };
    return c;
}

CostFunction CostFunction::tabulated(std::vector<double> x, std::vector<double> cv) {
    if (x.size() != cv.size() || x.size() < 2)
        throw ValidationError("tabulated cost needs matching x/c arrays with >= 2 knots");
    if (x.front() != 0.0 || x.back() != 1.0)
        throw ValidationError("tabulated cost: x grid must span [0, 1]");
    if (!(cv.front() >= 0.0)) throw ValidationError("tabulated cost: c(0) must be >= 0");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1]))
            throw ValidationError("tabulated cost: x grid not strictly increasing at index " +
                                  std::to_string(i));
        if (!(cv[i] > cv[i - 1]))
            throw ValidationError("tabulated cost: values not strictly increasing at index " +
                                  std::to_string(i));
    }
    CostFunction c;
    c.kind_ = "tabulated";
    auto xs = std::make_shared<std::vector<double>>(std::move(x));
    auto cs = std::make_shared<std::vector<double>>(std::move(cv));
    auto interp = [](const std::vector<double>& a, const std::vector<double>& b, double v) {
        auto it = std::upper_bound(a.begin(), a.end(), v);
        std::size_t i = static_cast<std::size_t>(it - a.begin());
        if (i == 0) return b.front();
        if (i >= a.size()) i = a.size() - 1;
        const double w = (v - a[i - 1]) / (a[i] - a[i - 1]);
        return b[i - 1] + w * (b[i] - b[i - 1]);
    };
    c.value_ = [xs, cs, interp](double v) { return interp(*xs, *cs, clamp01(v)); };
    c.inverse_ = [xs, cs, interp](double y) {
        if (y <= cs->front()) return 0.0;
        if (y >= cs->back()) return 1.0;
        return interp(*cs, *xs, y);
    };
    c.kinks_.assign(xs->begin() + 1, xs->end() - 1);
    return c;
}

double CostFunction::derivative(double x) const {
    if (derivative_) return derivative_(x);
    return central_difference(value_, x);
}

}  // namespace contestlab
