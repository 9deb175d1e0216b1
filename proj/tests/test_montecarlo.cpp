#include "msm/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

namespace {

using msm::bernoulli::Action;
using msm::bernoulli::grid_belief;
using msm::bernoulli::SensingCost;
using msm::bernoulli::SensorModel;
using msm::estimation::Metric;
using msm::management::metric_action_cost;
using msm::mc::mc_expected_cost;
using msm::mc::McConfig;
using msm::mc::simulate_trial;
using msm::mc::SplitMix64;
using msm::metrics::MetricParams;

Action action_of(std::initializer_list<bool> bits) {
    return Action(std::vector<bool>(bits));
}

TEST(SplitMix64, SubstreamsAreStableAndDistinct) {
    SplitMix64 a = SplitMix64::substream(42, 0);
    SplitMix64 b = SplitMix64::substream(42, 0);
    SplitMix64 c = SplitMix64::substream(42, 1);
    EXPECT_EQ(a.next(), b.next());
    EXPECT_NE(a.next(), c.next());
    SplitMix64 u(7);
    for (int i = 0; i < 1000; ++i) {
        const double value = u.next_uniform();
        ASSERT_GE(value, 0.0);
        ASSERT_LT(value, 1.0);
    }
}

TEST(SimulateTrial, DegenerateCasesAreExact) {
    const MetricParams params(10.0, 2.0);
    const auto sure = grid_belief(std::vector<double>{1.0}, params);
    const auto empty = grid_belief(std::vector<double>{0.0}, params);
    for (Metric metric : {Metric::Gospa, Metric::Ospa, Metric::Uospa}) {
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            SplitMix64 rng = SplitMix64::substream(3, trial);
            EXPECT_DOUBLE_EQ(simulate_trial(sure, SensorModel(1.0), 10.0, action_of({true}),
                                            metric, rng),
                             0.0);
            SplitMix64 rng2 = SplitMix64::substream(4, trial);
            EXPECT_DOUBLE_EQ(simulate_trial(empty, SensorModel(0.5), 10.0, action_of({false}),
                                            metric, rng2),
                             0.0);
        }
    }
}

TEST(SimulateTrial, SingleFarTargetErrorsAreZeroOrHalfCutoffSquared) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.5}, params);
    const SensorModel sensor(0.7);
    // A single far target either matches exactly or costs c^2/2; the squared
    // metric goes through one root/square round trip, hence the tolerance.
    bool seen_zero = false;
    bool seen_miss = false;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        SplitMix64 rng = SplitMix64::substream(9, trial);
        const double value =
            simulate_trial(belief, sensor, 10.0, action_of({true}), Metric::Gospa, rng);
        if (value == 0.0) {
            seen_zero = true;
        } else {
            EXPECT_NEAR(value, 50.0, 1e-12);
            seen_miss = true;
        }
    }
    EXPECT_TRUE(seen_zero);
    EXPECT_TRUE(seen_miss);
}

TEST(McExpectedCost, DeterministicForFixedSeed) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.6, 0.6}, params);
    const McConfig config{2000, 77};
    const auto first = mc_expected_cost(belief, SensorModel(0.6), 10.0, SensingCost(10.0),
                                        action_of({true, false}), Metric::Ospa, config);
    const auto second = mc_expected_cost(belief, SensorModel(0.6), 10.0, SensingCost(10.0),
                                         action_of({true, false}), Metric::Ospa, config);
    EXPECT_EQ(first.mean, second.mean);
    EXPECT_EQ(first.std_error, second.std_error);
    EXPECT_EQ(first.num_trials, second.num_trials);

    const McConfig other{2000, 78};
    const auto third = mc_expected_cost(belief, SensorModel(0.6), 10.0, SensingCost(10.0),
                                        action_of({true, false}), Metric::Ospa, other);
    EXPECT_NE(first.mean, third.mean);
}

TEST(McExpectedCost, IdleActionMatchesPriorCostExactlyInMean) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.3}, params);
    const McConfig config{20000, 5};
    const auto result = mc_expected_cost(belief, SensorModel(0.7), 10.0, SensingCost(0.0),
                                         action_of({false}), Metric::Gospa, config);
    // Only the existence draw is random; the mean must sit within a few
    // standard errors of (c^2/2) * r = 15.
    EXPECT_NEAR(result.mean, 15.0, 4.0 * result.std_error);
    EXPECT_GT(result.std_error, 0.0);
}

TEST(McExpectedCost, AgreesWithAnalyticCost) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.6, 0.6}, params);
    const SensorModel sensor(0.6);
    const SensingCost sensing(10.0);
    const auto action = action_of({true, true});
    for (Metric metric : {Metric::Gospa, Metric::Ospa, Metric::Uospa}) {
        const double analytic =
            metric_action_cost(belief, sensor, 10.0, sensing, action, metric).total;
        const auto estimate = mc_expected_cost(belief, sensor, 10.0, sensing, action, metric,
                                               McConfig{20000, 11});
        EXPECT_NEAR(estimate.mean, analytic, 4.0 * estimate.std_error)
            << msm::estimation::to_string(metric);
    }
}

TEST(McExpectedCost, StandardErrorShrinksWithTrials) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.5}, params);
    const auto small = mc_expected_cost(belief, SensorModel(0.7), 10.0, SensingCost(0.0),
                                        action_of({true}), Metric::Gospa, McConfig{1000, 13});
    const auto large = mc_expected_cost(belief, SensorModel(0.7), 10.0, SensingCost(0.0),
                                        action_of({true}), Metric::Gospa, McConfig{100000, 13});
    // 100x the trials should shrink the standard error by about 10x.
    const double ratio = small.std_error / large.std_error;
    EXPECT_GT(ratio, 5.0);
    EXPECT_LT(ratio, 20.0);
}

TEST(McExpectedCost, RejectsZeroTrials) {
    const MetricParams params(10.0, 2.0);
    const auto belief = grid_belief(std::vector<double>{0.5}, params);
    EXPECT_THROW((void)mc_expected_cost(belief, SensorModel(0.7), 10.0, SensingCost(0.0),
                                        action_of({true}), Metric::Gospa, McConfig{0, 1}),
                 std::invalid_argument);
}

} // namespace
