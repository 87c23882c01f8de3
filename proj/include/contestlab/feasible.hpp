#pragma once

#include <utility>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"

namespace contestlab {

// Union of disjoint closed intervals of cutoffs (singletons allowed),
// ascending. A cutoff s is feasible when some admissible mechanism makes it
// a symmetric equilibrium.
struct FeasibleSet {
    std::vector<std::pair<double, double>> intervals;

    bool contains(double s, double tol = 1e-9) const;
    bool empty() const { return intervals.empty(); }
    double max_point() const;  // right end of the last interval
};

// Cutoffs inducible by mechanisms between v_min and v_max (componentwise):
// s belongs iff phi(s, v_min) <= 0 (vacuous at s = 1) and phi(s, v_max) >= 0
// (vacuous at s = 0). Interval endpoints are refined zeros of the two phi
// curves; endpoints closer than merge_tol are merged.
FeasibleSet feasible_set(const AllocationVector& v_min, const AllocationVector& v_max,
                         const ContestConfig& config, const TypeDistribution& F,
                         const CostFunction& c, int grid = 2048);

// The full design space [reversed, standard]: membership reduces to
// phi(s, standard) >= 0 or s = 0.
FeasibleSet feasible_set_default(const ContestConfig& config, const TypeDistribution& F,
                                 const CostFunction& c, int grid = 2048);

// m = 1 specialization: phi(s, ones) = (1/n) sum_{k=0}^{n-2} (1-F)^k - c(s)
// is strictly decreasing, so the set is {0}, [0, root], or [0, 1].
FeasibleSet single_prize_feasible(const ContestConfig& config, const TypeDistribution& F,
                                  const CostFunction& c);

// Parameter t with phi(s, family(t)) = 0 (within 1e-9), i.e. the family
// member that makes s an equilibrium; boundary targets return an endpoint
// parameter with the matching weak inequality. Throws ValidationError when
// s is not bracketed by the family.
double synthesize_mechanism(double s, const MechanismFamily& family,
                            const ContestConfig& config, const TypeDistribution& F,
                            const CostFunction& c);

// Closed-form quota parameter for interior s (m = 1 unless relax):
//   t(s) = (sum_{k=0}^{n-2} F^k + (n/m) c(s)) / (sum F^k + sum (1-F)^k).
// The resulting quota vector has s as its unique equilibrium cutoff.
double quota_parameter(double s, const ContestConfig& config, const TypeDistribution& F,
                       const CostFunction& c, bool relax = false);

}  // namespace contestlab
