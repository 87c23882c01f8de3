#include "contestlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "contestlab/errors.hpp"

namespace contestlab {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Index of the segment containing x in a sorted knot vector.
std::size_t segment_of(const std::vector<double>& knots, double x) {
    auto it = std::upper_bound(knots.begin(), knots.end(), x);
    std::size_t i = static_cast<std::size_t>(it - knots.begin());
    if (i == 0) return 0;
    if (i >= knots.size()) return knots.size() - 2;
    return i - 1;
}

}  // namespace

TypeDistribution TypeDistribution::uniform() {
    TypeDistribution d;
    d.kind_ = "uniform";
    d.cdf_ = [](double x) { return clamp01(x); };
    d.pdf_ = [](double) { return 1.0; };
    d.quantile_ = [](double u) { return clamp01(u); };
    d.mean_ = 0.5;
    return d;
}

TypeDistribution TypeDistribution::power(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ValidationError("power distribution needs alpha > 0");
    TypeDistribution d;
    d.kind_ = "power";
    d.cdf_ = [alpha](double x) { return std::pow(clamp01(x), alpha); };
    d.pdf_ = [alpha](double x) { return alpha * std::pow(clamp01(x), alpha - 1.0); };
    d.quantile_ = [alpha](double u) { return std::pow(clamp01(u), 1.0 / alpha); };
    d.mean_ = alpha / (1.0 + alpha);
    return d;
}

TypeDistribution TypeDistribution::tabulated(std::vector<double> x, std::vector<double> F) {
    if (x.size() != F.size() || x.size() < 2)
        throw ValidationError("tabulated cdf needs matching x/F arrays with >= 2 knots");
    if (x.front() != 0.0 || x.back() != 1.0)
        throw ValidationError("tabulated cdf: x grid must span [0, 1]");
    if (F.front() != 0.0 || F.back() != 1.0)
        throw ValidationError("tabulated cdf: F must run from 0 to 1");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1]))
            throw ValidationError("tabulated cdf: x grid not strictly increasing at index " +
                                  std::to_string(i));
        if (!(F[i] > F[i - 1]))
            throw ValidationError("tabulated cdf: F values not strictly increasing at index " +
                                  std::to_string(i));
    }

    TypeDistribution d;
    d.kind_ = "tabulated";
    auto xs = std::make_shared<std::vector<double>>(std::move(x));
    auto Fs = std::make_shared<std::vector<double>>(std::move(F));
    d.cdf_ = [xs, Fs](double v) {
        v = clamp01(v);
        const std::size_t i = segment_of(*xs, v);
        const double w = (v - (*xs)[i]) / ((*xs)[i + 1] - (*xs)[i]);
        return (*Fs)[i] + w * ((*Fs)[i + 1] - (*Fs)[i]);
    };
    d.pdf_ = [xs, Fs](double v) {
        v = clamp01(v);
        const std::size_t i = segment_of(*xs, v);
        return ((*Fs)[i + 1] - (*Fs)[i]) / ((*xs)[i + 1] - (*xs)[i]);
    };
    d.quantile_ = [xs, Fs](double u) {
        u = clamp01(u);
        const std::size_t i = segment_of(*Fs, u);
        const double w = (u - (*Fs)[i]) / ((*Fs)[i + 1] - (*Fs)[i]);
        return (*xs)[i] + w * ((*xs)[i + 1] - (*xs)[i]);
    };
    // Piecewise-constant density: the mean is a finite sum.
    double mean = 0.0;
    for (std::size_t i = 0; i + 1 < xs->size(); ++i) {
        const double density = ((*Fs)[i + 1] - (*Fs)[i]) / ((*xs)[i + 1] - (*xs)[i]);
        mean += density * 0.5 * ((*xs)[i + 1] * (*xs)[i + 1] - (*xs)[i] * (*xs)[i]);
    }
    d.mean_ = mean;
    return d;
}

}  // namespace contestlab
