#include "contestlab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "contestlab/errors.hpp"

namespace contestlab {

namespace {

constexpr long kBlockTrials = 4096;

// Per-block moment sums. Blocks are accumulated sequentially and then merged
// in a fixed pairwise tree, so results do not depend on the thread count.
struct BlockStats {
    double sum_C = 0.0, sum_C2 = 0.0;  // mean high-effort cost per trial
    double sum_T = 0.0, sum_T2 = 0.0;  // mean selected type per trial
    double sum_X = 0.0, sum_X2 = 0.0;  // selected high-effort agents
    double sum_H = 0.0, sum_H2 = 0.0;  // high-effort agents
    double sum_XH = 0.0;
    double sum_Y = 0.0, sum_Y2 = 0.0;  // selected low-effort agents
    double sum_L = 0.0, sum_L2 = 0.0;  // low-effort agents
    double sum_YL = 0.0;
    long exact_m = 0, bounds = 0;
};

BlockStats combine(const BlockStats& a, const BlockStats& b) {
    BlockStats r;
    r.sum_C = a.sum_C + b.sum_C;
    r.sum_C2 = a.sum_C2 + b.sum_C2;
    r.sum_T = a.sum_T + b.sum_T;
    r.sum_T2 = a.sum_T2 + b.sum_T2;
    r.sum_X = a.sum_X + b.sum_X;
    r.sum_X2 = a.sum_X2 + b.sum_X2;
    r.sum_H = a.sum_H + b.sum_H;
    r.sum_H2 = a.sum_H2 + b.sum_H2;
    r.sum_XH = a.sum_XH + b.sum_XH;
    r.sum_Y = a.sum_Y + b.sum_Y;
    r.sum_Y2 = a.sum_Y2 + b.sum_Y2;
    r.sum_L = a.sum_L + b.sum_L;
    r.sum_L2 = a.sum_L2 + b.sum_L2;
    r.sum_YL = a.sum_YL + b.sum_YL;
    r.exact_m = a.exact_m + b.exact_m;
    r.bounds = a.bounds + b.bounds;
    return r;
}

// Ratio estimator R = sum_num/sum_den with a delta-method standard error,
// treating trials as independent units.
void ratio_estimate(double sx, double sx2, double sh, double sh2, double sxh, double& hat,
                    double& se) {
    if (sh <= 0.0) {
        hat = std::numeric_limits<double>::quiet_NaN();
        se = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    hat = sx / sh;
    const double resid2 = std::max(0.0, sx2 - 2.0 * hat * sxh + hat * hat * sh2);
    se = std::sqrt(resid2) / sh;
}

void check_inputs(const AllocationVector& v, double s, const ContestConfig& config, long trials) {
    config.validate();
    if (v.n() != config.n || v.m() != config.m)
        throw ValidationError("allocation vector dimensions do not match the contest");
    if (!v.ex_post_feasible())
        throw ValidationError("allocation vector is not ex-post feasible");
    if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("cutoff must lie in [0, 1]");
    if (trials < 1) throw ValidationError("trial count must be positive");
}

}  // namespace

LotteryOutcome realize_lottery(const AllocationVector& v, const std::vector<std::uint8_t>& actions,
                               Rng& rng) {
    const int n = v.n();
    const int m = v.m();
    if (static_cast<int>(actions.size()) != n)
        throw ValidationError("action profile size does not match the contest");
    int k = 0;
    for (std::uint8_t a : actions) {
        if (a > 1) throw ValidationError("actions must be 0 or 1");
        k += a;
    }
    const double vk = v.at(k);
    const int lb = static_cast<int>(std::lround(v.lower_bound(k)));
    const int ub = static_cast<int>(std::lround(v.upper_bound(k)));
    if (vk < lb - 1e-9 || vk > ub + 1e-9)
        throw ValidationError("allocation component outside its ex-post bounds");

    const double fl = std::floor(vk);
    const double frac = vk - fl;
    int z = static_cast<int>(fl);
    if (frac >= 1.0 - 1e-12)
        z += 1;
    else if (frac > 1e-12 && rng.unit() < frac)
        z += 1;
    z = std::clamp(z, lb, ub);

    std::vector<int> high, low;
    high.reserve(k);
    low.reserve(n - k);
    for (int i = 0; i < n; ++i) (actions[i] ? high : low).push_back(i);

    LotteryOutcome out{std::vector<std::uint8_t>(n, 0), z};
    for (int j = 0; j < z; ++j) {
        const std::uint64_t pick = j + rng.below(high.size() - j);
        std::swap(high[j], high[pick]);
        out.selected[high[j]] = 1;
    }
    const int need_low = m - z;
    for (int j = 0; j < need_low; ++j) {
        const std::uint64_t pick = j + rng.below(low.size() - j);
        std::swap(low[j], low[pick]);
        out.selected[low[j]] = 1;
    }
    return out;
}

SimulationReport run(const AllocationVector& v, double s, const ContestConfig& config,
                     const TypeDistribution& F, const CostFunction& c, long trials,
                     std::uint64_t seed, int threads) {
    check_inputs(v, s, config, trials);
    const int n = config.n;
    const int m = config.m;
    const long n_blocks = (trials + kBlockTrials - 1) / kBlockTrials;

    std::vector<BlockStats> blocks(n_blocks);
    auto work = [&](long b_lo, long b_hi) {
        std::vector<double> types(n);
        std::vector<std::uint8_t> actions(n);
        for (long bi = b_lo; bi < b_hi; ++bi) {
            BlockStats st;
            const long t_lo = bi * kBlockTrials;
            const long t_hi = std::min(trials, t_lo + kBlockTrials);
            for (long t = t_lo; t < t_hi; ++t) {
                Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
                int k = 0;
                double cost_sum = 0.0;
                for (int i = 0; i < n; ++i) {
                    types[i] = F.quantile(rng.unit());
                    actions[i] = types[i] < s ? 1 : 0;
                    if (actions[i]) {
                        ++k;
                        cost_sum += c(types[i]);
                    }
                }
                const LotteryOutcome out = realize_lottery(v, actions, rng);
                int picked = 0, picked_high = 0;
                double sel_type = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (!out.selected[i]) continue;
                    ++picked;
                    picked_high += actions[i];
                    sel_type += types[i];
                }
                if (picked != m) ++st.exact_m;
                if (out.high_winners < v.lower_bound(k) - 1e-9 ||
                    out.high_winners > v.upper_bound(k) + 1e-9)
                    ++st.bounds;

                const double Ct = cost_sum / n;
                const double Tt = sel_type / m;
                const double Xt = picked_high, Ht = k;
                const double Yt = picked - picked_high, Lt = n - k;
                st.sum_C += Ct;
                st.sum_C2 += Ct * Ct;
                st.sum_T += Tt;
                st.sum_T2 += Tt * Tt;
                st.sum_X += Xt;
                st.sum_X2 += Xt * Xt;
                st.sum_H += Ht;
                st.sum_H2 += Ht * Ht;
                st.sum_XH += Xt * Ht;
                st.sum_Y += Yt;
                st.sum_Y2 += Yt * Yt;
                st.sum_L += Lt;
                st.sum_L2 += Lt * Lt;
                st.sum_YL += Yt * Lt;
            }
            blocks[bi] = st;
        }
    };

    int t_count = threads;
    if (t_count <= 0) t_count = static_cast<int>(std::thread::hardware_concurrency());
    if (t_count < 1) t_count = 1;
    t_count = static_cast<int>(std::min<long>(t_count, n_blocks));
    if (t_count == 1) {
        work(0, n_blocks);
    } else {
        std::vector<std::thread> pool;
        const long per = (n_blocks + t_count - 1) / t_count;
        for (int w = 1; w < t_count; ++w) {
            const long lo = w * per;
            if (lo >= n_blocks) break;
            pool.emplace_back(work, lo, std::min(n_blocks, lo + per));
        }
        work(0, std::min(n_blocks, per));
        for (auto& th : pool) th.join();
    }

    // Fixed pairwise reduction tree.
    while (blocks.size() > 1) {
        std::vector<BlockStats> next((blocks.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < blocks.size(); i += 2)
            next[i / 2] = combine(blocks[i], blocks[i + 1]);
        if (blocks.size() % 2 == 1) next.back() = blocks.back();
        blocks.swap(next);
    }
    const BlockStats& st = blocks.front();

    const double N = static_cast<double>(trials);
    auto mean_se = [&](double sx, double sx2, double& hat, double& se) {
        hat = sx / N;
        if (trials < 2) {
            se = 0.0;
            return;
        }
        const double var = std::max(0.0, (sx2 - N * hat * hat) / (N - 1.0));
        se = std::sqrt(var / N);
    };

    SimulationReport rep;
    rep.trials = trials;
    rep.seed = seed;
    mean_se(st.sum_C, st.sum_C2, rep.C_hat, rep.C_se);
    double T_hat = 0.0, T_se = 0.0;
    mean_se(st.sum_T, st.sum_T2, T_hat, T_se);
    const double mu = F.mean();
    if (s <= 0.0 || s >= 1.0) {
        // All agents act alike, so the lottery cannot see types; selection is
        // exchangeable and the efficiency gain is identically zero.
        rep.eta_hat = 0.0;
        rep.eta_se = 0.0;
    } else {
        rep.eta_hat = 1.0 - T_hat / mu;
        rep.eta_se = T_se / mu;
    }
    ratio_estimate(st.sum_X, st.sum_X2, st.sum_H, st.sum_H2, st.sum_XH, rep.q_high_hat,
                   rep.q_high_se);
    ratio_estimate(st.sum_Y, st.sum_Y2, st.sum_L, st.sum_L2, st.sum_YL, rep.q_low_hat,
                   rep.q_low_se);
    rep.exact_m_violations = st.exact_m;
    rep.bound_violations = st.bounds;
    return rep;
}

DeviationAudit deviation_audit(const AllocationVector& v, double s, const ContestConfig& config,
                               const TypeDistribution& F, const CostFunction& c, long trials,
                               std::uint64_t seed, int probe_count) {
    check_inputs(v, s, config, trials);
    if (probe_count < 2) throw ValidationError("need at least two probe types");
    const int n = config.n;
    const int m = config.m;

    std::vector<double> probes;
    probes.reserve(probe_count + 1);
    for (int i = 0; i < probe_count; ++i)
        probes.push_back(static_cast<double>(i) / (probe_count - 1));
    probes.push_back(s);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                 probes.end());

    // The probe's own selection enters via its exact conditional probability,
    // so the only randomness is the rivals' high-effort count k:
    //   delta(k) = v_{k+1}/(k+1) - (m - v_k)/(n - k),
    // identical for every probe; the probe only shifts the cost term.
    double sum_d = 0.0, sum_d2 = 0.0;
    for (long t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        int k = 0;
        for (int i = 0; i < n - 1; ++i) k += F.quantile(rng.unit()) < s ? 1 : 0;
        const double d = v.at(k + 1) / (k + 1) - (m - v.at(k)) / static_cast<double>(n - k);
        sum_d += d;
        sum_d2 += d * d;
    }
    const double N = static_cast<double>(trials);
    const double mean_d = sum_d / N;
    const double var_d =
        trials > 1 ? std::max(0.0, (sum_d2 - N * mean_d * mean_d) / (N - 1.0)) : 0.0;
    const double se = std::sqrt(var_d / N);

    DeviationAudit audit;
    audit.max_gain = -std::numeric_limits<double>::infinity();
    audit.max_gain_se = se;
    for (double theta : probes) {
        DeviationRow row;
        row.theta = theta;
        row.prescribed_high = theta < s;
        const double high_minus_low = mean_d - c(theta);
        row.gain = row.prescribed_high ? -high_minus_low : high_minus_low;
        row.se = se;
        audit.max_gain = std::max(audit.max_gain, row.gain);
        audit.rows.push_back(row);
    }
    return audit;
}

}  // namespace contestlab
