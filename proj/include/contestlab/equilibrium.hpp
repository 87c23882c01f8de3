#pragma once

#include <string>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"

namespace contestlab {

// Selection probabilities for one agent when every rival plays cutoff s:
// q_high conditions on the agent exerting high effort, q_low on low effort.
// Conservation: F(s)*q_high + (1-F(s))*q_low = m/n for every s.
struct InterimAllocation {
    double q_high;
    double q_low;
};

InterimAllocation interim_allocation(const AllocationVector& v, double s,
                                     const ContestConfig& config, const TypeDistribution& F);

// Deviation incentive of the marginal type s when rivals play cutoff s:
//   phi(s, v) = (1/n) sum_{k=1}^{n-1} F^{k-1} (1-F)^{n-1-k} C(n,k) v_k
//               - c(s) - (m/n) sum_{k=0}^{n-2} F^k.
// Equals q_high - c(s) - q_low. Interior equilibria are zeros of phi;
// s=0 is an equilibrium iff phi(0,v) <= 0 and s=1 iff phi(1,v) >= 0.
double phi(double s, const AllocationVector& v, const ContestConfig& config,
           const TypeDistribution& F, const CostFunction& c);

enum class CutoffKind { interior, boundary_zero, boundary_one };

struct EquilibriumCutoff {
    double s;
    CutoffKind kind;
};

const char* to_string(CutoffKind kind);

struct FindOptions {
    int grid = 2048;          // sign-scan samples over [0, 1]
    double root_tol = 1e-10;  // bisection width for interior roots
    double phi_tol = 1e-9;    // classification tolerance on phi
};

// Every symmetric equilibrium cutoff of v, ascending. Interior zeros come
// from a sign scan plus |phi| touch detection; boundary cutoffs from the weak
// inequalities above. Appends a warning when two roots sit closer than the
// scan step (the scan may then be missing siblings between them).
std::vector<EquilibriumCutoff> find_equilibria(const AllocationVector& v,
                                               const ContestConfig& config,
                                               const TypeDistribution& F, const CostFunction& c,
                                               const FindOptions& options = {},
                                               std::vector<std::string>* warnings = nullptr);

// Direct check that cutoff play is a best response against itself: for
// type_samples evenly spaced types, the action prescribed by s must weakly
// beat the alternative (ties resolved toward low effort).
bool best_response_check(const AllocationVector& v, double s, const ContestConfig& config,
                         const TypeDistribution& F, const CostFunction& c,
                         int type_samples = 201);

}  // namespace contestlab
