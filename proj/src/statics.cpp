#include "contestlab/statics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contestlab/errors.hpp"
#include "contestlab/numerics.hpp"

namespace contestlab {

void PowerFamily::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be positive");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("gamma must be positive");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("eps must be positive");
}

TypeDistribution PowerFamily::distribution() const {
    validate();
    return TypeDistribution::power(alpha);
}

CostFunction PowerFamily::cost() const {
    validate();
    return CostFunction::power(gamma, eps, distribution());
}

double PowerFamily::societal_cost(double s) const {
    validate();
    return gamma / (eps + 1.0) * std::pow(s, (eps + 1.0) * alpha);
}

double PowerFamily::selection_efficiency(double s, const ContestConfig& config) const {
    validate();
    config.validate();
    return static_cast<double>(config.n) / config.m * gamma * std::pow(s, (eps + 1.0) * alpha) *
           (1.0 - s);
}

double PowerFamily::budget_derivative(double s, const ContestConfig& config) const {
    validate();
    config.validate();
    const double p = (eps + 1.0) * alpha;
    return static_cast<double>(config.n) / (config.m * alpha) * (p - (p + 1.0) * s);
}

SStar s_star_relaxed(const PowerFamily& family, const ContestConfig& config) {
    family.validate();
    config.validate();
    const double ratio = static_cast<double>(config.m) / config.n;
    const double raw =
        (family.eps + 1.0 - ratio * config.lambda) * family.alpha /
        ((family.eps + 1.0) * family.alpha + 1.0);
    return SStar{raw, std::clamp(raw, 0.0, 1.0)};
}

double s_max_single_prize(const PowerFamily& family, const ContestConfig& config) {
    family.validate();
    config.validate();
    if (config.m != 1) throw ValidationError("single-prize bound needs m = 1");
    const int n = config.n;
    auto h = [&](double s) {
        // (m/n) sum_k (1-F)^k - c(s), the single-prize participation margin.
        double sum = 0.0, q = 1.0;
        const double g = 1.0 - std::pow(s, family.alpha);
        for (int k = 0; k <= n - 2; ++k) {
            sum += q;
            q *= g;
        }
        return sum / n - family.gamma * std::pow(s, family.alpha * family.eps);
    };
    const double h0 = h(0.0);
    const double h1 = h(1.0);
    if (h0 <= 0.0) return 0.0;  // unreachable when c(0) = 0, kept for symmetry
    if (h1 >= 0.0) return 1.0;
    return bisect(h, 0.0, 1.0, h0, h1, 1e-12);
}

double s_star_constrained(const PowerFamily& family, const ContestConfig& config) {
    const double cap = s_max_single_prize(family, config);
    return std::min(s_star_relaxed(family, config).value, cap);
}

SweepTable sweep(const PowerFamily& base, const ContestConfig& config,
                 const std::string& parameter, double lo, double hi, int count) {
    base.validate();
    config.validate();
    if (count < 2) throw ValidationError("sweep needs at least two points");
    if (!(lo < hi)) throw ValidationError("sweep range must satisfy lo < hi");
    const bool log_spaced = parameter == "gamma";
    if (log_spaced && !(lo > 0.0)) throw ValidationError("gamma sweep needs lo > 0");

    SweepTable table;
    table.parameter = parameter;
    const double ratio = static_cast<double>(config.m) / config.n;
    if (parameter == "lambda")
        table.expected_trend = "decreasing";
    else if (parameter == "eps")
        table.expected_trend = "increasing";
    else if (parameter == "gamma")
        table.expected_trend = "flat";
    else if (parameter == "alpha")
        table.expected_trend =
            base.eps + 1.0 - ratio * config.lambda >= 0.0 ? "increasing" : "decreasing";
    else
        throw ValidationError("unknown sweep parameter: " + parameter);

    for (int i = 0; i < count; ++i) {
        const double w = static_cast<double>(i) / (count - 1);
        const double value = log_spaced ? lo * std::pow(hi / lo, w) : lo + w * (hi - lo);
        PowerFamily fam = base;
        ContestConfig cfg = config;
        if (parameter == "alpha")
            fam.alpha = value;
        else if (parameter == "gamma")
            fam.gamma = value;
        else if (parameter == "eps")
            fam.eps = value;
        else
            cfg.lambda = value;

        SweepRow row;
        row.value = value;
        const SStar st = s_star_relaxed(fam, cfg);
        row.s_star_raw = st.raw;
        row.s_star = st.value;
        if (cfg.m == 1) {
            row.s_max = s_max_single_prize(fam, cfg);
            row.s_solution = std::min(st.value, row.s_max);
        } else {
            row.s_max = std::numeric_limits<double>::quiet_NaN();
            row.s_solution = st.value;
        }
        row.C = fam.societal_cost(row.s_solution);
        row.eta = fam.selection_efficiency(row.s_solution, cfg);
        row.payoff = row.eta - cfg.lambda * row.C;
        table.rows.push_back(row);
    }

    table.trend_holds = true;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        const double a = table.rows[i].s_star_raw;
        const double b = table.rows[i + 1].s_star_raw;
        if (table.expected_trend == "decreasing" && b > a + 1e-12) table.trend_holds = false;
        if (table.expected_trend == "increasing" && b < a - 1e-12) table.trend_holds = false;
        if (table.expected_trend == "flat" && std::abs(b - a) > 1e-12) table.trend_holds = false;
    }
    return table;
}

}  // namespace contestlab
