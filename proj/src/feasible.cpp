#include "contestlab/feasible.hpp"

#include <algorithm>
#include <cmath>

#include "contestlab/equilibrium.hpp"
#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

namespace {

constexpr double kMergeTol = 1e-8;  // endpoint jitter below this is one interval
constexpr double kPhiTol = 1e-9;

using Intervals = std::vector<std::pair<double, double>>;

// {s in [0,1] : sign * f(s) >= 0}, as closed intervals. Sign-scan breakpoints
// plus touch points; a touch point satisfying the weak inequality on its own
// becomes a singleton.
Intervals condition_intervals(const std::function<double(double)>& f, double sign, int grid) {
    const RootScan scan = find_roots(f, 0.0, 1.0, grid, 1e-12, kPhiTol);
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), scan.roots.begin(), scan.roots.end());
    cuts.push_back(1.0);

    Intervals out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        if (sign * f(mid) >= 0.0) {
            // Cell endpoints are zeros of f (or domain ends), so the weak
            // inequality extends to the closed cell.
            out.emplace_back(cuts[i], cuts[i + 1]);
        }
    }
    for (double x : scan.touch_points) out.emplace_back(x, x);
    std::sort(out.begin(), out.end());

    Intervals merged;
    for (const auto& iv : out) {
        if (!merged.empty() && iv.first <= merged.back().second + kMergeTol)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    return merged;
}

Intervals intersect(const Intervals& a, const Intervals& b) {
    Intervals out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].first, b[j].first);
        const double hi = std::min(a[i].second, b[j].second);
        if (hi >= lo) out.emplace_back(lo, hi);
        if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
    return out;
}

// Force the membership status of a boundary point, which obeys only one of
// the two phi conditions.
Intervals with_boundary(Intervals ivs, double point, bool member) {
    const bool covered = !ivs.empty() && ((point == 0.0 && ivs.front().first <= kMergeTol) ||
                                          (point == 1.0 && ivs.back().second >= 1.0 - kMergeTol));
    if (member && !covered) {
        ivs.emplace_back(point, point);
        std::sort(ivs.begin(), ivs.end());
    } else if (member && covered) {
        if (point == 0.0)
            ivs.front().first = 0.0;
        else
            ivs.back().second = 1.0;
    } else if (!member && covered) {
        if (point == 0.0) {
            if (ivs.front().second <= kMergeTol)
                ivs.erase(ivs.begin());
            else
                ivs.front().first = std::max(ivs.front().first, 1e-12);
        } else {
            if (ivs.back().first >= 1.0 - kMergeTol)
                ivs.pop_back();
            else
                ivs.back().second = std::min(ivs.back().second, 1.0 - 1e-12);
        }
    }
    return ivs;
}

}  // namespace

bool FeasibleSet::contains(double s, double tol) const {
    for (const auto& iv : intervals)
        if (s >= iv.first - tol && s <= iv.second + tol) return true;
    return false;
}

double FeasibleSet::max_point() const {
    if (intervals.empty()) throw ValidationError("empty feasible set has no maximum");
    return intervals.back().second;
}

FeasibleSet feasible_set(const AllocationVector& v_min, const AllocationVector& v_max,
                         const ContestConfig& config, const TypeDistribution& F,
                         const CostFunction& c, int grid) {
    config.validate();
    for (int k = 1; k < config.n; ++k) {
        if (v_min.at(k) > v_max.at(k) + 1e-12)
            throw ValidationError("v_min must lie below v_max componentwise");
    }
    auto phi_min = [&](double s) { return phi(s, v_min, config, F, c); };
    auto phi_max = [&](double s) { return phi(s, v_max, config, F, c); };

    // Interior membership needs phi(s, v_min) <= 0 <= phi(s, v_max); the
    // boundary points each obey only their own condition.
    Intervals a = condition_intervals(phi_min, -1.0, grid);
    Intervals b = condition_intervals(phi_max, +1.0, grid);
    Intervals both = intersect(a, b);
    both = with_boundary(std::move(both), 0.0, phi_min(0.0) <= kPhiTol);
    both = with_boundary(std::move(both), 1.0, phi_max(1.0) >= -kPhiTol);
    return FeasibleSet{std::move(both)};
}

FeasibleSet feasible_set_default(const ContestConfig& config, const TypeDistribution& F,
                                 const CostFunction& c, int grid) {
    config.validate();
    const AllocationVector v_bar = standard_vector(config);
    auto phi_max = [&](double s) { return phi(s, v_bar, config, F, c); };
    Intervals b = condition_intervals(phi_max, +1.0, grid);
    // Against the weakest admissible mechanism every cutoff passes the lower
    // condition, and s = 0 is always attainable (play the pure lottery).
    b = with_boundary(std::move(b), 0.0, true);
    b = with_boundary(std::move(b), 1.0, phi_max(1.0) >= -kPhiTol);
    return FeasibleSet{std::move(b)};
}

FeasibleSet single_prize_feasible(const ContestConfig& config, const TypeDistribution& F,
                                  const CostFunction& c) {
    config.validate();
    if (config.m != 1) throw ValidationError("single-prize feasible set needs m = 1");
    const int n = config.n;
    auto phi_ones = [&](double s) {
        double sum = 0.0, q = 1.0;
        const double one_minus_F = 1.0 - F.cdf(s);
        for (int k = 0; k <= n - 2; ++k) {
            sum += q;
            q *= one_minus_F;
        }
        return sum / n - c(s);
    };
    // phi_ones is strictly decreasing, so the set is an interval anchored at 0.
    if (phi_ones(0.0) <= 0.0) return FeasibleSet{{{0.0, 0.0}}};
    if (phi_ones(1.0) >= 0.0) return FeasibleSet{{{0.0, 1.0}}};
    const double root = bisect(phi_ones, 0.0, 1.0, phi_ones(0.0), phi_ones(1.0), 1e-12);
    return FeasibleSet{{{0.0, root}}};
}

double synthesize_mechanism(double s, const MechanismFamily& family, const ContestConfig& config,
                            const TypeDistribution& F, const CostFunction& c) {
    config.validate();
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("target cutoff must lie in [0, 1]");
    auto g = [&](double t) { return phi(s, family.at(t), config, F, c); };

    if (s == 0.0) {
        // Low effort must be weakly dominant at the family's low end.
        if (g(0.0) <= kPhiTol) return 0.0;
        throw ValidationError("cutoff 0 not inducible by this family");
    }
    if (s == 1.0) {
        if (g(1.0) >= -kPhiTol) return 1.0;
        throw ValidationError("cutoff 1 not inducible by this family");
    }

    const double g0 = g(0.0);
    const double g1 = g(1.0);
    if (std::abs(g0) <= kPhiTol) return 0.0;
    if (std::abs(g1) <= kPhiTol) return 1.0;
    if (g0 > 0.0 || g1 < 0.0)
        throw ValidationError("target cutoff is infeasible for this mechanism family");
    const double t = bisect(g, 0.0, 1.0, g0, g1, 1e-18);
    if (std::abs(g(t)) > kPhiTol)
        throw NumericalError("mechanism synthesis did not converge to an equilibrium");
    return t;
}

double quota_parameter(double s, const ContestConfig& config, const TypeDistribution& F,
                       const CostFunction& c, bool relax) {
    config.validate();
    if (config.m != 1 && !relax)
        throw ValidationError("quota parameter needs m = 1 (or the relaxed variant)");
    if (!(s > 0.0 && s < 1.0))
        throw ValidationError("quota parameter is defined for interior cutoffs only");
    const int n = config.n;
    const double Fs = F.cdf(s);
    double sum_F = 0.0, sum_G = 0.0, pF = 1.0, pG = 1.0;
    for (int k = 0; k <= n - 2; ++k) {
        sum_F += pF;
        sum_G += pG;
        pF *= Fs;
        pG *= 1.0 - Fs;
    }
    const double t = (sum_F + n * c(s) / config.m) / (sum_F + sum_G);
    if (t > 1.0 + 1e-12)
        throw ValidationError("cutoff lies outside the quota-feasible range");
    return std::min(t, 1.0);
}

}  // namespace contestlab
