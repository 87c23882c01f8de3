#include "contestlab/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

namespace {

void check_dimensions(const AllocationVector& v, const ContestConfig& config) {
    if (v.n() != config.n || v.m() != config.m)
        throw ValidationError("allocation vector dimensions do not match the contest");
}

}  // namespace

InterimAllocation interim_allocation(const AllocationVector& v, double s,
                                     const ContestConfig& config, const TypeDistribution& F) {
    config.validate();
    check_dimensions(v, config);
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("cutoff s must lie in [0, 1]");
    const int n = config.n;
    const int m = config.m;
    const double p = F.cdf(s);
    const std::vector<double> binom = binomial_row(n - 1);
    // k rivals exert high effort with Binomial(n-1, F(s)) weight; joining the
    // high group shares v_{k+1} among k+1, staying low shares m - v_k among n-k.
    double q_high = 0.0, q_low = 0.0;
    for (int k = 0; k <= n - 1; ++k) {
        const double w = binom[k] * std::pow(p, k) * std::pow(1.0 - p, n - 1 - k);
        q_high += w * v.at(k + 1) / (k + 1);
        q_low += w * (m - v.at(k)) / (n - k);
    }
    return {q_high, q_low};
}

double phi(double s, const AllocationVector& v, const ContestConfig& config,
           const TypeDistribution& F, const CostFunction& c) {
    config.validate();
    check_dimensions(v, config);
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("cutoff s must lie in [0, 1]");
    const int n = config.n;
    const int m = config.m;
    const double p = F.cdf(s);
    const std::vector<double> binom = binomial_row(n);
    double gain = 0.0;
    for (int k = 1; k <= n - 1; ++k)
        gain += std::pow(p, k - 1) * std::pow(1.0 - p, n - 1 - k) * binom[k] * v.at(k);
    double lottery = 0.0;
    double pk = 1.0;
    for (int k = 0; k <= n - 2; ++k) {
        lottery += pk;
        pk *= p;
    }
    return gain / n - c(s) - m * lottery / n;
}

const char* to_string(CutoffKind kind) {
    switch (kind) {
        case CutoffKind::interior: return "interior";
        case CutoffKind::boundary_zero: return "boundary_zero";
        case CutoffKind::boundary_one: return "boundary_one";
    }
    return "?";
}

std::vector<EquilibriumCutoff> find_equilibria(const AllocationVector& v,
                                               const ContestConfig& config,
                                               const TypeDistribution& F, const CostFunction& c,
                                               const FindOptions& options,
                                               std::vector<std::string>* warnings) {
    config.validate();
    auto f = [&](double s) { return phi(s, v, config, F, c); };
    const RootScan scan = find_roots(f, 0.0, 1.0, options.grid, options.root_tol, options.phi_tol);

    std::vector<double> interior = scan.roots;
    interior.insert(interior.end(), scan.touch_points.begin(), scan.touch_points.end());
    std::sort(interior.begin(), interior.end());
    // Zeros hugging a boundary belong to the boundary classification below.
    const double edge = 1e-8;
    interior.erase(std::remove_if(interior.begin(), interior.end(),
                                  [&](double s) { return s < edge || s > 1.0 - edge; }),
                   interior.end());
    interior.erase(std::unique(interior.begin(), interior.end(),
                               [&](double a, double b) { return b - a < 2 * options.root_tol; }),
                   interior.end());

    std::vector<EquilibriumCutoff> out;
    if (f(0.0) <= options.phi_tol) out.push_back({0.0, CutoffKind::boundary_zero});
    for (double s : interior) out.push_back({s, CutoffKind::interior});
    if (f(1.0) >= -options.phi_tol) out.push_back({1.0, CutoffKind::boundary_one});

    if (warnings) {
        for (std::size_t i = 0; i + 1 < interior.size(); ++i) {
            if (interior[i + 1] - interior[i] < scan.grid_step) {
                warnings->push_back(
                    "equilibria closer than the scan step; rerun with a finer grid to rule out "
                    "unseen siblings");
                break;
            }
        }
    }
    return out;
}

bool best_response_check(const AllocationVector& v, double s, const ContestConfig& config,
                         const TypeDistribution& F, const CostFunction& c, int type_samples) {
    config.validate();
    if (type_samples < 2) throw ValidationError("best response check needs >= 2 type samples");
    const InterimAllocation q = interim_allocation(v, s, config, F);
    const double tol = 1e-9;
    for (int i = 0; i < type_samples; ++i) {
        const double theta = static_cast<double>(i) / (type_samples - 1);
        const double gain_high = q.q_high - q.q_low - c(theta);
        if (theta == s) continue;  // the threshold type may take either action
        if (theta < s) {
            // Prescribed high effort must weakly beat shirking.
            if (gain_high < -tol) return false;
        } else {
            // Prescribed low effort must weakly beat working.
            if (gain_high > tol) return false;
        }
    }
    return true;
}

}  // namespace contestlab
