#include "msm/montecarlo.hpp"

#include <cmath>

namespace msm::mc {
namespace {

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix(seed) ^ mix(stream * 0xd1342543de82ef95ULL + 1));
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double simulate_trial(const MultiBernoulli& belief, const SensorModel& sensor, double cutoff,
                      const Action& action, Metric metric, SplitMix64& rng) {
    if (belief.size() != action.size()) {
        throw std::invalid_argument("simulate_trial: action length does not match the belief");
    }
    const std::size_t n = belief.size();
    std::vector<bool> exists(n);
    std::vector<double> posterior(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = belief.component(i).existence;
        exists[i] = rng.next_uniform() < r;
        if (!action[i]) {
            posterior[i] = r;
            continue;
        }
        const bool detected = exists[i] && rng.next_uniform() < sensor.detection_probability();
        posterior[i] = bernoulli::posterior_existence(
            r, sensor, true,
            detected ? bernoulli::Detection::Detected : bernoulli::Detection::Empty);
    }
    const estimation::EstimateMask mask = estimation::optimal_mask(posterior, metric, cutoff).mask;
    metrics::PointSet realized;
    metrics::PointSet estimate;
    for (std::size_t i = 0; i < n; ++i) {
        if (exists[i]) realized.add(belief.component(i).location);
        if (mask[i]) estimate.add(belief.component(i).location);
    }
    const metrics::MetricParams params(cutoff, 2.0);
    double value = 0.0;
    switch (metric) {
    case Metric::Gospa: value = metrics::gospa2(realized, estimate, params).total; break;
    case Metric::Ospa: value = metrics::ospa(realized, estimate, params); break;
    case Metric::Uospa: value = metrics::uospa(realized, estimate, params); break;
    }
    return value * value;
}

McResult mc_expected_cost(const MultiBernoulli& belief, const SensorModel& sensor, double cutoff,
                          const SensingCost& sensing, const Action& action, Metric metric,
                          const McConfig& config) {
    if (config.num_trials == 0) {
        throw std::invalid_argument("mc_expected_cost: num_trials must be >= 1");
    }
    // Welford accumulation in trial order; every trial gets its own
    // substream so the sequence is independent of any future parallel split.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t trial = 0; trial < config.num_trials; ++trial) {
        SplitMix64 rng = SplitMix64::substream(config.seed, trial);
        const double value = simulate_trial(belief, sensor, cutoff, action, metric, rng);
        const double delta = value - mean;
        mean += delta / static_cast<double>(trial + 1);
        m2 += delta * (value - mean);
    }
    McResult out;
    out.num_trials = config.num_trials;
    const double n = static_cast<double>(config.num_trials);
    out.std_error = config.num_trials > 1 ? std::sqrt(m2 / (n - 1.0)) / std::sqrt(n) : 0.0;
    out.mean = mean + sensing.total(action);
    return out;
}

} // namespace msm::mc
