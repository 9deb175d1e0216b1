#pragma once

#include "msm/management.hpp"

#include <cstdint>

namespace msm::mc {

using bernoulli::Action;
using bernoulli::MultiBernoulli;
using bernoulli::SensingCost;
using bernoulli::SensorModel;
using estimation::Metric;

/// Small splittable PRNG (splitmix64). Value-type state, no globals;
/// substream(seed, k) yields independent streams for parallel trials.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for trial `stream` of a run seeded with `seed`.
    [[nodiscard]] static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();

    /// Uniform double in [0, 1), 53 random bits.
    double next_uniform();

private:
    std::uint64_t state_;
};

struct McConfig {
    std::uint64_t num_trials = 100000;
    std::uint64_t seed = 0;
};

struct McResult {
    double mean = 0.0;
    double std_error = 0.0; ///< sample standard deviation / sqrt(num_trials)
    std::uint64_t num_trials = 0;
};

/// One Monte-Carlo draw of the squared metric error under `action`: sample
/// which targets exist, sample detections in the observed regions, update
/// the existence probabilities, report the optimal estimate for `metric`,
/// and score it against the realized set with the squared set metric (p = 2).
[[nodiscard]] double simulate_trial(const MultiBernoulli& belief, const SensorModel& sensor,
                                    double cutoff, const Action& action, Metric metric,
                                    SplitMix64& rng);

/// Empirical expected action cost: the trial mean plus the sensing cost.
/// Bit-identical for identical (seed, num_trials, inputs).
[[nodiscard]] McResult mc_expected_cost(const MultiBernoulli& belief, const SensorModel& sensor,
                                        double cutoff, const SensingCost& sensing,
                                        const Action& action, Metric metric,
                                        const McConfig& config);

} // namespace msm::mc
