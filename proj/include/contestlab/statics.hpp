#pragma once

#include <string>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"

namespace contestlab {

// The closed-form family F(x) = x^alpha, c(x) = gamma * F(x)^eps. Everything
// downstream of the cutoff has an elementary expression here, which makes the
// family the reference point for comparative statics:
//   mu = alpha/(1+alpha),  C(s) = gamma/(eps+1) * s^((eps+1)alpha),
//   eta(s) = (n/m) gamma s^((eps+1)alpha) (1-s),
//   Eta'(C(s)) = n/(m alpha) * ((eps+1)alpha - ((eps+1)alpha + 1) s).
struct PowerFamily {
    double alpha = 1.0;
    double gamma = 1.0;
    double eps = 1.0;

    void validate() const;  // all three strictly positive

    TypeDistribution distribution() const;
    CostFunction cost() const;
    double mu() const { return alpha / (1.0 + alpha); }

    double societal_cost(double s) const;
    double selection_efficiency(double s, const ContestConfig& config) const;
    double budget_derivative(double s, const ContestConfig& config) const;
};

// Unconstrained maximizer of eta - lambda*C over cutoffs:
//   raw = (eps + 1 - (m/n) lambda) * alpha / ((eps+1) alpha + 1),
// reported both as-is and clamped to [0, 1].
struct SStar {
    double raw;
    double value;  // clamped
};
SStar s_star_relaxed(const PowerFamily& family, const ContestConfig& config);

// Upper end of the single-prize feasible set: the root of
//   gamma s^(alpha eps) = (m/n) sum_{k=0}^{n-2} (1 - s^alpha)^k
// clamped to [0, 1]. Requires m = 1.
double s_max_single_prize(const PowerFamily& family, const ContestConfig& config);

// Projection of the relaxed optimum onto the feasible interval [0, s_max]
// (m = 1): the feasible cutoff nearest to s_star.
double s_star_constrained(const PowerFamily& family, const ContestConfig& config);

struct SweepRow {
    double value;        // swept parameter value
    double s_star_raw;
    double s_star;       // clamped
    double s_max;        // NaN when m > 1
    double s_solution;   // constrained optimum (m = 1) or clamped s_star
    double C;
    double eta;
    double payoff;
};

struct SweepTable {
    std::string parameter;        // "alpha", "gamma", "eps", or "lambda"
    std::vector<SweepRow> rows;
    std::string expected_trend;   // trend of raw s_star predicted by the closed form
    bool trend_holds;             // observed raw s_star sequence matches it
};

// Tabulates the family solution over count values of one parameter
// (log-spaced for gamma, linear otherwise) and checks the predicted trend of
// the unconstrained optimum: decreasing in lambda, increasing in eps, flat in
// gamma, and in alpha rising or falling with the sign of eps+1 - (m/n)lambda.
SweepTable sweep(const PowerFamily& base, const ContestConfig& config,
                 const std::string& parameter, double lo, double hi, int count = 33);

}  // namespace contestlab
