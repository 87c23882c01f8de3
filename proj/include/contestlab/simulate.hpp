#pragma once

#include <cstdint>
#include <vector>

#include "contestlab/contest.hpp"
#include "contestlab/cost.hpp"
#include "contestlab/distribution.hpp"
#include "contestlab/rng.hpp"

namespace contestlab {

// One realized allocation: exactly m agents selected.
struct LotteryOutcome {
    std::vector<std::uint8_t> selected;
    int high_winners;  // prizes that went to the high-effort group
};

// Draws an allocation with the exact group totals of v: with k high-effort
// agents, the high group receives z in {floor(v_k), ceil(v_k)} prizes with
// E[z] = v_k, spread uniformly inside each group. Per-agent selection
// probabilities are v_k/k (high) and (m-v_k)/(n-k) (low). Requires an
// ex-post feasible vector; otherwise a group could owe more prizes than it
// has members.
LotteryOutcome realize_lottery(const AllocationVector& v,
                               const std::vector<std::uint8_t>& actions, Rng& rng);

struct SimulationReport {
    long trials = 0;
    double C_hat = 0.0;
    double C_se = 0.0;
    double eta_hat = 0.0;
    double eta_se = 0.0;
    double q_high_hat = 0.0;  // empirical P(selected | high effort)
    double q_high_se = 0.0;
    double q_low_hat = 0.0;
    double q_low_se = 0.0;
    long exact_m_violations = 0;
    long bound_violations = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of (C, eta) under cutoff play: each trial draws n
// types from F, applies the cutoff (high effort iff type < s), realizes the
// lottery and accumulates cost and selected-type statistics. Identical seed
// gives a bit-identical report for any thread count (threads <= 0 picks the
// hardware count); trials are split into fixed blocks combined pairwise.
// At s in {0, 1} all agents act alike, selection is type-blind by symmetry,
// and eta is reported as exactly 0.
SimulationReport run(const AllocationVector& v, double s, const ContestConfig& config,
                     const TypeDistribution& F, const CostFunction& c, long trials,
                     std::uint64_t seed, int threads = 1);

struct DeviationRow {
    double theta;          // probe type
    bool prescribed_high;  // action the cutoff assigns to theta
    double gain;           // estimated payoff gain from deviating
    double se;
};

struct DeviationAudit {
    std::vector<DeviationRow> rows;
    double max_gain;
    double max_gain_se;
};

// Estimates, for a grid of probe types (plus the marginal type s), the
// payoff gain from deviating against rivals at cutoff s. Rival draws are
// shared across probes and actions (common random numbers) and the agent's
// own selection enters through its exact conditional probability, so the
// only noise is the rivals' effort count.
DeviationAudit deviation_audit(const AllocationVector& v, double s, const ContestConfig& config,
                               const TypeDistribution& F, const CostFunction& c, long trials,
                               std::uint64_t seed, int probe_count = 21);

}  // namespace contestlab
