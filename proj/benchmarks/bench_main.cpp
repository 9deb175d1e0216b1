#include "msm/estimation.hpp"
#include "msm/management.hpp"
#include "msm/metrics.hpp"
#include "msm/montecarlo.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using msm::mc::SplitMix64;

msm::metrics::PointSet random_set(std::size_t size, std::size_t dim, SplitMix64& rng) {
    msm::metrics::PointSet set;
    for (std::size_t i = 0; i < size; ++i) {
        Eigen::VectorXd point(static_cast<Eigen::Index>(dim));
        for (Eigen::Index d = 0; d < point.size(); ++d) {
            point[d] = 40.0 * rng.next_uniform() - 20.0;
        }
        set.add(point);
    }
    return set;
}

void BM_Gospa2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(42);
    const auto x = random_set(n, 2, rng);
    const auto y = random_set(n, 2, rng);
    const msm::metrics::MetricParams params(10.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msm::metrics::gospa2(x, y, params));
    }
}
BENCHMARK(BM_Gospa2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Ospa(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(7);
    const auto x = random_set(n, 2, rng);
    const auto y = random_set(n, 2, rng);
    const msm::metrics::MetricParams params(10.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msm::metrics::ospa(x, y, params));
    }
}
BENCHMARK(BM_Ospa)->Arg(8)->Arg(32)->Arg(128);

void BM_SolveAssignment(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    SplitMix64 rng(3);
    Eigen::MatrixXd cost(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            cost(i, j) = rng.next_uniform();
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(msm::metrics::solve_assignment(cost));
    }
}
BENCHMARK(BM_SolveAssignment)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_OptimalMask(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(11);
    std::vector<double> existences(n);
    for (auto& r : existences) r = rng.next_uniform();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            msm::estimation::optimal_mask(existences, msm::estimation::Metric::Ospa, 10.0));
    }
}
BENCHMARK(BM_OptimalMask)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_OptimalAction(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(19);
    std::vector<double> existences(n);
    for (auto& r : existences) r = rng.next_uniform();
    const msm::metrics::MetricParams params(10.0, 2.0);
    const auto belief = msm::bernoulli::grid_belief(existences, params);
    const msm::bernoulli::SensorModel sensor(0.6);
    const msm::bernoulli::SensingCost sensing(10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msm::management::optimal_action(
            belief, sensor, params.cutoff(), sensing, msm::estimation::Metric::Ospa));
    }
}
BENCHMARK(BM_OptimalAction)->Arg(2)->Arg(4)->Arg(6);

void BM_McTrials(benchmark::State& state) {
    const msm::metrics::MetricParams params(10.0, 2.0);
    const auto belief = msm::bernoulli::grid_belief(std::vector<double>{0.6, 0.6}, params);
    const msm::bernoulli::SensorModel sensor(0.6);
    const msm::bernoulli::SensingCost sensing(10.0);
    const msm::bernoulli::Action action(std::vector<bool>{true, true});
    std::uint64_t trial = 0;
    for (auto _ : state) {
        SplitMix64 rng = SplitMix64::substream(99, trial++);
        benchmark::DoNotOptimize(msm::mc::simulate_trial(belief, sensor, params.cutoff(), action,
                                                         msm::estimation::Metric::Ospa, rng));
    }
}
BENCHMARK(BM_McTrials);

} // namespace

BENCHMARK_MAIN();
