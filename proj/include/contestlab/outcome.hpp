#pragma once

#include <functional>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"

namespace contestlab {

// Expected per-agent effort cost at cutoff s: C(s) = integral_0^s c dF.
// Strictly increasing in s; computed by adaptive quadrature in the
// percentile variable u = F(theta), which keeps the integrand bounded even
// when the density blows up at an endpoint.
double societal_cost(double s, const TypeDistribution& F, const CostFunction& c,
                     double tol = 1e-9);

// eta(s) = (n c(s) / (m mu)) * integral_0^s (mu - theta) dF. Exactly 0 at
// s = 0 and s = 1 (no selection information when everyone acts alike).
double selection_efficiency(double s, const ContestConfig& config, const TypeDistribution& F,
                            const CostFunction& c, double tol = 1e-9);

// Elasticity of effort cost in the type percentile: eps(s) = c'(s)F(s) / (c(s)f(s)).
// A 0/0 quotient (possible as s -> 0) is resolved by evaluating at s = 1e-4.
double cost_elasticity(double s, const TypeDistribution& F, const CostFunction& c);

struct DerivativeInfo {
    double left;
    double right;
    bool kink;  // one-sided values disagree (cost has a corner at s)
};

// Slope of the efficiency frontier against cost at the cutoff s in (0, 1):
//   Eta'(C(s)) = (n/(m mu)) * [(mu - s) + eps(s) * (mu - E[theta | theta < s])].
// Undefined where c(s) = 0 or f(s) = 0. At a cost kink the one-sided values
// are reported through info and their average is returned.
double budget_derivative(double s, const ContestConfig& config, const TypeDistribution& F,
                         const CostFunction& c, DerivativeInfo* info = nullptr);

struct FrontierSample {
    double s;
    double C;
    double eta;
};

// The (C, eta) frontier sampled along s, with live evaluators for refinement
// and a monotone inverse of the cost coordinate.
class FrontierCurve {
  public:
    FrontierCurve(std::vector<FrontierSample> samples, std::function<double(double)> cost_of_s,
                  std::function<double(double)> eta_of_s);

    const std::vector<FrontierSample>& samples() const { return samples_; }
    double cost(double s) const { return cost_of_s_(s); }
    double eta(double s) const { return eta_of_s_(s); }

    // s with C(s) = target, by bisection between bracketing samples.
    double inverse_cost(double target) const;

    double max_cost() const { return samples_.back().C; }

  private:
    std::vector<FrontierSample> samples_;
    std::function<double(double)> cost_of_s_;
    std::function<double(double)> eta_of_s_;
};

// Samples (s, C, eta) on grid_size uniform s-points, inserting midpoints
// where |delta eta| between neighbours exceeds 1e-3. Rejects a non-monotone
// cost coordinate (an invalid distribution/cost pairing).
FrontierCurve frontier(const ContestConfig& config, const TypeDistribution& F,
                       const CostFunction& c, int grid_size = 4096);

}  // namespace contestlab
