#include <cmath>

#include "../vendor/doctest.h"
#include "contestlab/equilibrium.hpp"
#include "contestlab/errors.hpp"
#include "contestlab/feasible.hpp"
#include "contestlab/outcome.hpp"
#include "contestlab/statics.hpp"
#include "oracle_helpers.hpp"

using namespace contestlab;

TEST_CASE("closed-form family agrees with the quadrature modules") {
    oracle::InstanceGen gen(2176);
    for (int rep = 0; rep < 10; ++rep) {
        PowerFamily fam;
        fam.alpha = gen.uniform(0.5, 3.0);
        fam.gamma = gen.uniform(0.2, 2.0);
        fam.eps = gen.uniform(0.5, 2.0);
        const int n = gen.uniform_int(2, 5);
        const int m = gen.uniform_int(1, n - 1);
        const ContestConfig cfg{n, m, 1.0};
        const TypeDistribution F = fam.distribution();
        const CostFunction c = fam.cost();
        const double s = gen.uniform(0.1, 0.9);

        CHECK(fam.mu() == doctest::Approx(F.mean()).epsilon(1e-10));
        CHECK(fam.societal_cost(s) ==
              doctest::Approx(societal_cost(s, F, c, 1e-12)).epsilon(1e-9));
        CHECK(fam.selection_efficiency(s, cfg) ==
              doctest::Approx(selection_efficiency(s, cfg, F, c, 1e-12)).epsilon(1e-9));
        CHECK(fam.budget_derivative(s, cfg) ==
              doctest::Approx(budget_derivative(s, cfg, F, c)).epsilon(1e-6));
    }
}

TEST_CASE("relaxed optimum: spot values of the closed form") {
    // raw = (eps + 1 - (m/n) lambda) alpha / ((eps+1) alpha + 1)
    PowerFamily fam;  // alpha = gamma = eps = 1
    SUBCASE("baseline") {
        const SStar s = s_star_relaxed(fam, {2, 1, 1.0});
        CHECK(s.raw == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(s.value == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("free information: lambda = 0 maximizes eta alone") {
        const SStar s = s_star_relaxed(fam, {2, 1, 0.0});
        CHECK(s.raw == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("expensive budget clamps at zero") {
        const SStar s = s_star_relaxed(fam, {2, 1, 6.0});
        CHECK(s.raw == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
        CHECK(s.value == 0.0);
    }
    SUBCASE("alpha scaling") {
        PowerFamily heavy;
        heavy.alpha = 3.0;
        const SStar s = s_star_relaxed(heavy, {2, 1, 1.0});
        // (1 + 1 - 0.5) * 3 / (2*3 + 1) = 4.5/7
        CHECK(s.raw == doctest::Approx(4.5 / 7.0).epsilon(1e-15));
    }
}

TEST_CASE("relaxed optimum maximizes the family payoff") {
    oracle::InstanceGen gen(2287);
    for (int rep = 0; rep < 10; ++rep) {
        PowerFamily fam;
        fam.alpha = gen.uniform(0.5, 2.5);
        fam.gamma = gen.uniform(0.3, 1.5);
        fam.eps = gen.uniform(0.5, 2.0);
        const int n = gen.uniform_int(2, 4);
        const int m = gen.uniform_int(1, n - 1);
        const double lambda = gen.uniform(0.0, 2.5);
        const ContestConfig cfg{n, m, lambda};
        const SStar star = s_star_relaxed(fam, cfg);
        auto payoff = [&](double s) {
            return fam.selection_efficiency(s, cfg) - lambda * fam.societal_cost(s);
        };
        const double at_star = payoff(star.value);
        for (int i = 0; i <= 200; ++i) {
            const double s = i / 200.0;
            CHECK(at_star >= payoff(s) - 1e-10);
        }
    }
}

TEST_CASE("feasibility ceiling for a single prize") {
    SUBCASE("interior root: alpha = eps = 1, gamma = 2, n = 2") {
        // 2s = (1/2)(1), root where 2s^1... gamma s^(alpha eps) = (1/n) sum:
        // 2s = 0.5 -> s = 0.25
        PowerFamily fam;
        fam.gamma = 2.0;
        CHECK(s_max_single_prize(fam, {2, 1, 1.0}) ==
              doctest::Approx(0.25).epsilon(1e-10));
    }
    SUBCASE("cheap effort: the whole range is feasible") {
        PowerFamily fam;
        fam.gamma = 0.4;  // c(1) = 0.4 < 1/2
        CHECK(s_max_single_prize(fam, {2, 1, 1.0}) == 1.0);
    }
    SUBCASE("matches the general single-prize feasible set") {
        oracle::InstanceGen gen(2398);
        for (int rep = 0; rep < 10; ++rep) {
            PowerFamily fam;
            fam.alpha = gen.uniform(0.5, 2.5);
            fam.gamma = gen.uniform(0.3, 2.0);
            fam.eps = gen.uniform(0.5, 2.0);
            const int n = gen.uniform_int(2, 5);
            const ContestConfig cfg{n, 1, 1.0};
            const double fast = s_max_single_prize(fam, cfg);
            const FeasibleSet set =
                single_prize_feasible(cfg, fam.distribution(), fam.cost());
            CHECK(fast == doctest::Approx(set.max_point()).epsilon(1e-8));
        }
    }
    SUBCASE("multi-prize contests are rejected") {
        PowerFamily fam;
        CHECK_THROWS_AS(s_max_single_prize(fam, {3, 2, 1.0}), ValidationError);
    }
}

TEST_CASE("constrained optimum is the projection onto the feasible range") {
    oracle::InstanceGen gen(2509);
    for (int rep = 0; rep < 15; ++rep) {
        PowerFamily fam;
        fam.alpha = gen.uniform(0.5, 2.5);
        fam.gamma = gen.uniform(0.3, 2.0);
        fam.eps = gen.uniform(0.5, 2.0);
        const int n = gen.uniform_int(2, 5);
        const double lambda = gen.uniform(0.0, 2.0);
        const ContestConfig cfg{n, 1, lambda};
        const double sol = s_star_constrained(fam, cfg);
        const double cap = s_max_single_prize(fam, cfg);
        const SStar star = s_star_relaxed(fam, cfg);
        CHECK(sol == doctest::Approx(std::min(star.value, cap)).epsilon(1e-12));
        CHECK(sol <= cap + 1e-12);
    }
}

TEST_CASE("parameter sweeps: predicted trends hold") {
    PowerFamily base;
    const ContestConfig cfg{2, 1, 1.0};

    SUBCASE("lambda raises the price of information: cutoff falls") {
        const SweepTable t = sweep(base, cfg, "lambda", 0.1, 3.0, 17);
        CHECK(t.expected_trend == "decreasing");
        CHECK(t.trend_holds);
        CHECK(t.rows.size() == 17);
        CHECK(t.rows.front().value == doctest::Approx(0.1));
        CHECK(t.rows.back().value == doctest::Approx(3.0));
    }
    SUBCASE("steeper cost curvature rewards selection: cutoff rises") {
        const SweepTable t = sweep(base, cfg, "eps", 0.5, 3.0, 17);
        CHECK(t.expected_trend == "increasing");
        CHECK(t.trend_holds);
    }
    SUBCASE("gamma scales cost and efficiency together: cutoff unmoved") {
        const SweepTable t = sweep(base, cfg, "gamma", 0.2, 5.0, 9);
        CHECK(t.expected_trend == "flat");
        CHECK(t.trend_holds);
        // log spacing for the scale parameter
        const double r0 = t.rows[1].value / t.rows[0].value;
        const double r1 = t.rows[2].value / t.rows[1].value;
        CHECK(r0 == doctest::Approx(r1).epsilon(1e-9));
    }
    SUBCASE("alpha direction flips with the sign of eps + 1 - (m/n) lambda") {
        const SweepTable up = sweep(base, cfg, "alpha", 0.5, 3.0, 9);
        CHECK(up.expected_trend == "increasing");  // 2 - 0.5 > 0
        CHECK(up.trend_holds);
        const ContestConfig pricey{2, 1, 6.0};     // 2 - 3 < 0
        const SweepTable down = sweep(base, pricey, "alpha", 0.5, 3.0, 9);
        CHECK(down.expected_trend == "decreasing");
        CHECK(down.trend_holds);
    }
    SUBCASE("unknown parameter is rejected") {
        CHECK_THROWS_AS(sweep(base, cfg, "delta", 0.1, 1.0, 5), ValidationError);
        CHECK_THROWS_AS(sweep(base, cfg, "lambda", 2.0, 1.0, 5), ValidationError);
        CHECK_THROWS_AS(sweep(base, cfg, "lambda", 0.1, 1.0, 1), ValidationError);
    }
}

TEST_CASE("sweep rows carry consistent outcome columns") {
    PowerFamily base;
    base.gamma = 0.8;
    const ContestConfig cfg{3, 1, 0.7};
    const SweepTable t = sweep(base, cfg, "eps", 0.6, 2.4, 7);
    for (const auto& row : t.rows) {
        PowerFamily fam = base;
        fam.eps = row.value;
        const SStar star = s_star_relaxed(fam, cfg);
        CHECK(row.s_star_raw == doctest::Approx(star.raw).epsilon(1e-12));
        CHECK(row.s_star == doctest::Approx(star.value).epsilon(1e-12));
        CHECK(row.s_solution ==
              doctest::Approx(s_star_constrained(fam, cfg)).epsilon(1e-10));
        CHECK(row.C == doctest::Approx(fam.societal_cost(row.s_solution)).epsilon(1e-10));
        CHECK(row.eta ==
              doctest::Approx(fam.selection_efficiency(row.s_solution, cfg)).epsilon(1e-10));
        CHECK(row.payoff ==
              doctest::Approx(row.eta - cfg.lambda * row.C).epsilon(1e-10));
        CHECK(!std::isnan(row.s_max));
    }

    // multi-prize sweeps have no single-prize ceiling
    const SweepTable t2 = sweep(base, {3, 2, 0.7}, "eps", 0.6, 2.4, 5);
    for (const auto& row : t2.rows) {
        CHECK(std::isnan(row.s_max));
        CHECK(row.s_solution == doctest::Approx(row.s_star).epsilon(1e-12));
    }
}

TEST_CASE("family validation") {
    PowerFamily bad;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad.alpha = 1.0;
    bad.gamma = -0.5;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad.gamma = 1.0;
    bad.eps = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}
