#include <cmath>

#include "../vendor/doctest.h"
#include "contestlab/equilibrium.hpp"
#include "contestlab/errors.hpp"
#include "contestlab/feasible.hpp"
#include "oracle_helpers.hpp"

using namespace contestlab;

TEST_CASE("feasible set of the quartic instance: two frozen intervals") {
    const ContestConfig cfg{3, 2, 1.0};
    const TypeDistribution F = TypeDistribution::power(4.0);
    const CostFunction c = CostFunction::affine(0.5, 1.0 / 9.0);
    const FeasibleSet set =
        feasible_set(reversed_vector(cfg), standard_vector(cfg), cfg, F, c);
    REQUIRE(set.intervals.size() == 2);
    CHECK(set.intervals[0].first == 0.0);
    CHECK(set.intervals[0].second == doctest::Approx(0.479764476987099).epsilon(1e-9));
    CHECK(set.intervals[1].first == doctest::Approx(0.918093791353583).epsilon(1e-9));
    CHECK(set.intervals[1].second == 1.0);
    CHECK(set.contains(0.2));
    CHECK(set.contains(0.95));
    CHECK(!set.contains(0.7));
    CHECK(set.max_point() == 1.0);

    // the default-space helper agrees with the explicit bounds here
    const FeasibleSet dflt = feasible_set_default(cfg, F, c);
    REQUIRE(dflt.intervals.size() == set.intervals.size());
    for (std::size_t i = 0; i < set.intervals.size(); ++i) {
        CHECK(dflt.intervals[i].first ==
              doctest::Approx(set.intervals[i].first).epsilon(1e-9));
        CHECK(dflt.intervals[i].second ==
              doctest::Approx(set.intervals[i].second).epsilon(1e-9));
    }
}

TEST_CASE("default space always contains the shutdown cutoff") {
    oracle::InstanceGen gen(1177);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = gen.uniform_int(2, 6);
        const int m = gen.uniform_int(1, n - 1);
        const ContestConfig cfg{n, m, 1.0};
        const TypeDistribution F = gen.distribution();
        const CostFunction c = gen.cost(F);
        const FeasibleSet set = feasible_set_default(cfg, F, c);
        REQUIRE(!set.empty());
        CHECK(set.contains(0.0));
        // membership test agrees with the defining inequality on a grid
        for (int i = 1; i < 40; ++i) {
            const double s = i / 40.0;
            const bool in = set.contains(s, 1e-7);
            const double g = phi(s, standard_vector(cfg), cfg, F, c);
            if (g > 1e-6) CHECK(in);
            if (g < -1e-6) CHECK(!in);
        }
    }
}

TEST_CASE("single prize: the three shapes of the feasible set") {
    SUBCASE("cost too high everywhere: only shutdown") {
        const ContestConfig cfg{3, 1, 1.0};
        const TypeDistribution F = TypeDistribution::uniform();
        const CostFunction c = CostFunction::affine(0.5, 0.9);  // c(0) = 0.9 > 2/3
        const FeasibleSet set = single_prize_feasible(cfg, F, c);
        REQUIRE(set.intervals.size() == 1);
        CHECK(set.intervals[0].first == 0.0);
        CHECK(set.intervals[0].second == 0.0);
    }
    SUBCASE("interior crossing: one interval up to the root") {
        // n=2 uniform, c = s/2 + 1/4: phi(s, ones) = 1/2 - c(s) = 1/4 - s/2
        // crosses zero at s = 1/2
        const ContestConfig cfg{2, 1, 1.0};
        const TypeDistribution F = TypeDistribution::uniform();
        const CostFunction c = CostFunction::affine(0.5, 0.25);
        const FeasibleSet set = single_prize_feasible(cfg, F, c);
        REQUIRE(set.intervals.size() == 1);
        CHECK(set.intervals[0].first == 0.0);
        CHECK(set.intervals[0].second == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("cheap effort: everything is feasible") {
        const ContestConfig cfg{2, 1, 1.0};
        const TypeDistribution F = TypeDistribution::uniform();
        const CostFunction c = CostFunction::affine(0.3, 0.0);  // c(1) = 0.3 < 1/2... stays below
        const FeasibleSet set = single_prize_feasible(cfg, F, c);
        REQUIRE(set.intervals.size() == 1);
        CHECK(set.intervals[0].first == 0.0);
        CHECK(set.intervals[0].second == 1.0);
    }
    SUBCASE("agrees with the general routine on random single-prize instances") {
        oracle::InstanceGen gen(1288);
        for (int rep = 0; rep < 15; ++rep) {
            const int n = gen.uniform_int(2, 6);
            const ContestConfig cfg{n, 1, 1.0};
            const TypeDistribution F = gen.smooth_distribution();
            const CostFunction c = gen.smooth_cost(F);
            const FeasibleSet fast = single_prize_feasible(cfg, F, c);
            const FeasibleSet general =
                feasible_set(reversed_vector(cfg), standard_vector(cfg), cfg, F, c);
            REQUIRE(fast.intervals.size() == general.intervals.size());
            for (std::size_t i = 0; i < fast.intervals.size(); ++i) {
                CHECK(fast.intervals[i].first ==
                      doctest::Approx(general.intervals[i].first).epsilon(1e-7));
                CHECK(fast.intervals[i].second ==
                      doctest::Approx(general.intervals[i].second).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("degenerate design space: a single pinned mechanism") {
    // v_min = v_max = standard, n=2 uniform c=s/2: phi = (1-s)/2 is >= 0
    // everywhere but <= 0 only at s = 1, so exactly one cutoff survives.
    const ContestConfig cfg{2, 1, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    const CostFunction c = CostFunction::affine(0.5, 0.0);
    const AllocationVector v = standard_vector(cfg);
    const FeasibleSet set = feasible_set(v, v, cfg, F, c);
    REQUIRE(set.intervals.size() == 1);
    CHECK(set.intervals[0].first == 1.0);
    CHECK(set.intervals[0].second == 1.0);
}

TEST_CASE("feasible set rejects crossed bounds") {
    const ContestConfig cfg{3, 2, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    const CostFunction c = CostFunction::affine(1.0, 0.0);
    CHECK_THROWS_AS(
        feasible_set(standard_vector(cfg), reversed_vector(cfg), cfg, F, c),
        ValidationError);
}

TEST_CASE("mechanism synthesis: quota family roundtrip") {
    const ContestConfig cfg{2, 1, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    const CostFunction c = CostFunction::affine(0.5, 0.0);
    const MechanismFamily quota = quota_family(cfg);

    const double t = synthesize_mechanism(0.5, quota, cfg, F, c);
    CHECK(t == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(t == doctest::Approx(quota_parameter(0.5, cfg, F, c)).epsilon(1e-9));
    // the synthesized member really makes 0.5 an equilibrium
    CHECK(std::abs(phi(0.5, quota.at(t), cfg, F, c)) <= 1e-9);

    // random roundtrips across instances
    oracle::InstanceGen gen(1399);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = gen.uniform_int(2, 5);
        const ContestConfig c2{n, 1, 1.0};
        const TypeDistribution F2 = gen.smooth_distribution();
        const CostFunction cost2 = gen.smooth_cost(F2);
        const double s = gen.uniform(0.1, 0.9);
        double t2;
        try {
            t2 = quota_parameter(s, c2, F2, cost2);
        } catch (const ValidationError&) {
            continue;  // target needs t > 1: legitimately out of reach
        }
        const MechanismFamily fam = quota_family(c2);
        CHECK(std::abs(phi(s, fam.at(t2), c2, F2, cost2)) <= 1e-9);
        CHECK(t2 == doctest::Approx(synthesize_mechanism(s, fam, c2, F2, cost2))
                        .epsilon(1e-7));
    }
}

TEST_CASE("mechanism synthesis: blind-draw family") {
    const ContestConfig cfg{2, 1, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    const CostFunction c = CostFunction::affine(0.5, 0.0);
    const MechanismFamily blind = blind_eye_family(cfg);
    // t=1 is the fully revealing contest: phi(s) = (1-s)/2 >= 0 so s=1 only
    const double t1 = synthesize_mechanism(1.0, blind, cfg, F, c);
    CHECK(std::abs(phi(1.0, blind.at(t1), cfg, F, c)) >= -1e-9);
    // an interior target inside the family's reach
    const double s = 0.6;
    const double t = synthesize_mechanism(s, blind, cfg, F, c);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    CHECK(std::abs(phi(s, blind.at(t), cfg, F, c)) <= 1e-9);
}

TEST_CASE("mechanism synthesis: unreachable targets are rejected") {
    const ContestConfig cfg{2, 1, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    // expensive effort: even the strongest member cannot induce s near 1
    const CostFunction c = CostFunction::affine(1.5, 0.0);
    const MechanismFamily quota = quota_family(cfg);
    CHECK_THROWS_AS(synthesize_mechanism(0.95, quota, cfg, F, c), ValidationError);
}

TEST_CASE("quota parameter: domain restrictions") {
    const ContestConfig cfg{2, 1, 1.0};
    const TypeDistribution F = TypeDistribution::uniform();
    const CostFunction c = CostFunction::affine(0.5, 0.0);
    CHECK_THROWS_AS(quota_parameter(0.0, cfg, F, c), ValidationError);
    CHECK_THROWS_AS(quota_parameter(1.0, cfg, F, c), ValidationError);

    const ContestConfig multi{3, 2, 1.0};
    CHECK_THROWS_AS(quota_parameter(0.5, multi, F, c), ValidationError);
    CHECK_NOTHROW(quota_parameter(0.5, multi, F, c, true));

    // a target whose quota would exceed every prize being reserved
    const CostFunction steep = CostFunction::affine(1.5, 0.0);
    CHECK_THROWS_AS(quota_parameter(0.9, cfg, F, steep), ValidationError);
}

TEST_CASE("quota closed form matches its definition") {
    // t(s) = (sum_k F^k + (n/m) c) / (sum_k F^k + sum_k (1-F)^k), k = 0..n-2
    oracle::InstanceGen gen(1510);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = gen.uniform_int(2, 6);
        const ContestConfig cfg{n, 1, 1.0};
        const TypeDistribution F = gen.smooth_distribution();
        const CostFunction c = gen.smooth_cost(F);
        const double s = gen.uniform(0.1, 0.9);
        const double Fs = F.cdf(s);
        double sum_f = 0.0, sum_g = 0.0;
        for (int k = 0; k <= n - 2; ++k) {
            sum_f += std::pow(Fs, k);
            sum_g += std::pow(1.0 - Fs, k);
        }
        const double expected = (sum_f + n * c(s)) / (sum_f + sum_g);
        if (expected > 1.0 + 1e-12) {
            CHECK_THROWS_AS(quota_parameter(s, cfg, F, c), ValidationError);
        } else {
            CHECK(quota_parameter(s, cfg, F, c) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
}
