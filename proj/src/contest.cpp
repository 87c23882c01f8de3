#include "contestlab/contest.hpp"

#include <algorithm>
#include <cmath>

#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

void ContestConfig::validate() const {
    if (n < 2) throw ValidationError("n: need at least 2 agents");
    if (!(m > 0 && m < n)) throw ValidationError("m: prize count must satisfy 0 < m < n");
    if (!std::isfinite(lambda)) throw ValidationError("lambda: must be finite");
}

AllocationVector::AllocationVector(int n, int m, std::vector<double> v) : n_(n), m_(m), v_(std::move(v)) {
    ContestConfig{n, m, 0.0}.validate();
    if (static_cast<int>(v_.size()) != n_ - 1)
        throw ValidationError("allocation vector needs exactly n-1 components");
    for (double x : v_) {
        if (!std::isfinite(x) || x < -1e-9 || x > m_ + 1e-9)
            throw ValidationError("allocation component outside [0, m]");
    }
}

double AllocationVector::at(int k) const {
    if (k <= 0) return 0.0;
    if (k >= n_) return m_;
    return v_[static_cast<std::size_t>(k) - 1];
}

double AllocationVector::lower_bound(int k) const { return std::max(0, m_ - (n_ - k)); }
double AllocationVector::upper_bound(int k) const { return std::min(k, m_); }

bool AllocationVector::ex_post_feasible(double tol) const {
    for (int k = 1; k < n_; ++k) {
        if (at(k) < lower_bound(k) - tol || at(k) > upper_bound(k) + tol) return false;
    }
    return true;
}

AllocationVector standard_vector(const ContestConfig& config) {
    std::vector<double> v(static_cast<std::size_t>(config.n) - 1);
    for (int k = 1; k < config.n; ++k) v[k - 1] = std::min(k, config.m);
    return AllocationVector(config.n, config.m, std::move(v));
}

AllocationVector reversed_vector(const ContestConfig& config) {
    std::vector<double> v(static_cast<std::size_t>(config.n) - 1);
    for (int k = 1; k < config.n; ++k) v[k - 1] = std::max(0, config.m - (config.n - k));
    return AllocationVector(config.n, config.m, std::move(v));
}

AllocationVector random_vector(const ContestConfig& config) {
    std::vector<double> v(static_cast<std::size_t>(config.n) - 1);
    for (int k = 1; k < config.n; ++k)
        v[k - 1] = static_cast<double>(k) * config.m / config.n;
    return AllocationVector(config.n, config.m, std::move(v));
}

MechanismFamily quota_family(const ContestConfig& config, bool relax) {
    config.validate();
    if (config.m != 1 && !relax)
        throw ValidationError("quota family needs m = 1 (or the relaxed variant)");
    MechanismFamily family;
    family.name = "quota";
    family.low_endpoint = "reversed";
    const int n = config.n;
    const int m = config.m;
    family.at = [n, m](double t) {
        t = std::min(1.0, std::max(0.0, t));
        return AllocationVector(n, m, std::vector<double>(static_cast<std::size_t>(n) - 1, m * t));
    };
    return family;
}

MechanismFamily blind_eye_family(const ContestConfig& config) {
    config.validate();
    MechanismFamily family;
    family.name = "blind";
    family.low_endpoint = "random";
    const int n = config.n;
    const int m = config.m;
    family.at = [n, m](double t) {
        t = std::min(1.0, std::max(0.0, t));
        std::vector<double> v(static_cast<std::size_t>(n) - 1);
        for (int k = 1; k < n; ++k) {
            // j of the k high-effort agents are correctly observed; they win
            // outright up to m prizes and the leftovers are spread over the
            // n-j agents recorded as low.
            const std::vector<double> binom = binomial_row(k);
            double sum = 0.0;
            for (int j = 0; j <= k; ++j) {
                const double w = binom[j] * std::pow(t, j) * std::pow(1.0 - t, k - j);
                const double direct = std::min(j, m);
                sum += w * (direct + (k - j) * (m - direct) / (n - j));
            }
            v[k - 1] = sum;
        }
        return AllocationVector(n, m, std::move(v));
    };
    return family;
}

MechanismFamily interpolated_family(const ContestConfig& config) {
    config.validate();
    MechanismFamily family;
    family.name = "interpolated";
    family.low_endpoint = "reversed";
    const AllocationVector lo = reversed_vector(config);
    const AllocationVector hi = standard_vector(config);
    const int n = config.n;
    const int m = config.m;
    family.at = [n, m, lo, hi](double t) {
        t = std::min(1.0, std::max(0.0, t));
        std::vector<double> v(static_cast<std::size_t>(n) - 1);
        for (int k = 1; k < n; ++k) v[k - 1] = lo.at(k) + t * (hi.at(k) - lo.at(k));
        return AllocationVector(n, m, std::move(v));
    };
    return family;
}

}  // namespace contestlab
