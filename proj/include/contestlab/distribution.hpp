#pragma once

#include <functional>
#include <string>
#include <vector>

namespace contestlab {

// Ability distribution F on [0, 1]. Lower draws mean more able agents.
// Immutable after construction; cdf is non-decreasing with F(0)=0, F(1)=1,
// the density is positive on (0, 1), and quantile inverts cdf there.
class TypeDistribution {
  public:
    static TypeDistribution uniform();
    static TypeDistribution power(double alpha);  // F(x) = x^alpha, alpha > 0
    // Piecewise-linear cdf through (x[i], F[i]); both grids must be strictly
    // increasing with x spanning [0, 1] and F spanning [0, 1].
    static TypeDistribution tabulated(std::vector<double> x, std::vector<double> F);

    double cdf(double x) const { return cdf_(x); }
    double pdf(double x) const { return pdf_(x); }
    double quantile(double u) const { return quantile_(u); }
    double mean() const { return mean_; }
    const std::string& kind() const { return kind_; }

  private:
    TypeDistribution() = default;

    std::string kind_;
    std::function<double(double)> cdf_;
    std::function<double(double)> pdf_;
    std::function<double(double)> quantile_;
    double mean_ = 0.0;
};

}  // namespace contestlab
