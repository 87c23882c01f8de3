#pragma once

#include <functional>
#include <string>
#include <vector>

#include "contestlab/distribution.hpp"

namespace contestlab {

// Strictly increasing effort cost c on [0, 1] with c >= 0 and a clamped
// pseudo-inverse: inverse(y) is 0 below c(0), 1 above c(1), exact in between.
class CostFunction {
  public:
    static CostFunction affine(double a, double b);  // a*x + b, a > 0, b >= 0
    // gamma * F(x)^eps with gamma > 0, eps > 0; strictly increasing because F is.
    static CostFunction power(double gamma, double eps, const TypeDistribution& F);
    // Piecewise-linear through (x[i], c[i]); strictly increasing values required.
    static CostFunction tabulated(std::vector<double> x, std::vector<double> c);

    double operator()(double x) const { return value_(x); }
    double inverse(double y) const { return inverse_(y); }

    // dc/dx: analytic for affine and power kinds, a central difference with
    // step 1e-6 otherwise. kink_points() lists knots where one-sided slopes
    // may disagree (tabulated kind only).
    double derivative(double x) const;
    bool analytic_derivative() const { return static_cast<bool>(derivative_); }
    const std::vector<double>& kink_points() const { return kinks_; }

    const std::string& kind() const { return kind_; }

  private:
    CostFunction() = default;

    std::string kind_;
    std::function<double(double)> value_;
    std::function<double(double)> inverse_;
    std::function<double(double)> derivative_;  // empty when not analytic
    std::vector<double> kinks_;
};

}  // namespace contestlab
