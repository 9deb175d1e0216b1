#include "msm/management.hpp"

#include <cmath>
#include <stdexcept>

namespace msm::management {
namespace {

bool tied(double a, double b) {
    return std::abs(a - b) <= kCostTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_action(const MultiBernoulli& belief, const Action& action) {
    if (belief.size() != action.size()) {
        throw std::invalid_argument("action length does not match the belief");
    }
}

} // namespace

double t_fn(double existence) {
    if (!(existence >= 0.0 && existence <= 1.0)) {
        throw std::domain_error("t_fn: existence must be in [0, 1]");
    }
    return std::min(existence, 1.0 - existence);
}

double gospa_component_cost(double existence, const SensorModel& sensor, double cutoff,
                            const SensingCost& sensing, bool observe) {
    const double half_c2 = 0.5 * cutoff * cutoff;
    if (!observe) {
        return half_c2 * t_fn(existence);
    }
    const double miss = 1.0 - existence * sensor.detection_probability();
    if (miss <= 0.0) {
        return sensing.per_sensor_cost(); // detection is certain, no residual error
    }
    const double posterior = existence * (1.0 - sensor.detection_probability()) / miss;
    return half_c2 * t_fn(posterior) * miss + sensing.per_sensor_cost();
}

ActionCost gospa_action_cost(const MultiBernoulli& belief, const SensorModel& sensor,
                             double cutoff, const SensingCost& sensing, const Action& action) {
    check_action(belief, action);
    ActionCost out{action, 0.0, sensing.total(action), 0.0};
    static const SensingCost kFree{0.0};
    for (std::size_t i = 0; i < belief.size(); ++i) {
        out.expected_ms_error += gospa_component_cost(belief.component(i).existence, sensor,
                                                      cutoff, kFree, action[i]);
    }
    out.total = out.expected_ms_error + out.sensing_cost;
    return out;
}

bool gospa_closed_form_decision(double existence, const SensorModel& sensor, double cutoff,
                                const SensingCost& sensing) {
    if (!(existence >= 0.0 && existence <= 1.0)) {
        throw std::domain_error("gospa_closed_form_decision: existence must be in [0, 1]");
    }
    const double pd = sensor.detection_probability();
    if (pd <= 0.0) {
        return false; // observing can never help
    }
    const double c2 = cutoff * cutoff;
    const double s = sensing.per_sensor_cost();
    const double lower = 2.0 * s / (c2 * pd);
    const double upper = (0.5 * c2 - s) / (c2 * (1.0 - 0.5 * pd));
    // Strict inequalities: on the band edges both actions cost the same and
    // ties resolve to not observing. The band is empty once s >= c^2 pd / 4.
    return existence > lower && existence < upper;
}

ActionCost metric_action_cost(const MultiBernoulli& belief, const SensorModel& sensor,
                              double cutoff, const SensingCost& sensing, const Action& action,
                              Metric metric) {
    check_action(belief, action);
    if (belief.size() > estimation::kMaskEnumerationLimit) {
        throw std::length_error("metric_action_cost: too many components to enumerate");
    }
    std::vector<std::size_t> observed;
    for (std::size_t i = 0; i < action.size(); ++i) {
        if (action[i]) observed.push_back(i);
    }

    std::vector<double> posterior = belief.existences();
    const std::vector<double> prior = posterior;
    double expected = 0.0;
    // One term per joint detection outcome of the observed regions.
    for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << observed.size()); ++outcome) {
        double probability = 1.0;
        for (std::size_t k = 0; k < observed.size(); ++k) {
            const std::size_t i = observed[k];
            const bool detected = (outcome >> k) & 1u;
            probability *= bernoulli::outcome_probability(belief.component(i), true, sensor,
                                                          detected ? bernoulli::Detection::Detected
                                                                   : bernoulli::Detection::Empty);
        }
        if (probability == 0.0) continue;
        for (std::size_t k = 0; k < observed.size(); ++k) {
            const std::size_t i = observed[k];
            const bool detected = (outcome >> k) & 1u;
            posterior[i] = bernoulli::posterior_existence(prior[i], sensor, true,
                                                          detected
                                                              ? bernoulli::Detection::Detected
                                                              : bernoulli::Detection::Empty);
        }
        expected += probability * estimation::optimal_mask(posterior, metric, cutoff).mmse;
    }
    ActionCost out{action, expected, sensing.total(action), 0.0};
    out.total = out.expected_ms_error + out.sensing_cost;
    return out;
}

DecisionSummary optimal_action(const MultiBernoulli& belief, const SensorModel& sensor,
                               double cutoff, const SensingCost& sensing, Metric metric,
                               TiePreference ties) {
    const std::size_t n = belief.size();
    if (n > estimation::kMaskEnumerationLimit) {
        throw std::length_error("optimal_action: too many components to enumerate");
    }
    DecisionSummary summary;
    summary.costs.reserve(std::size_t{1} << n);
    std::size_t best = 0;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
        summary.costs.push_back(
            metric_action_cost(belief, sensor, cutoff, sensing, Action::from_index(index, n),
                               metric));
        if (index == 0) continue;
        const ActionCost& current = summary.costs.back();
        const ActionCost& incumbent = summary.costs[best];
        if (current.total < incumbent.total && !tied(current.total, incumbent.total)) {
            best = summary.costs.size() - 1;
        } else if (tied(current.total, incumbent.total)) {
            // Lexicographic enumeration: a later action replaces the
            // incumbent only through the active-sensor preference.
            const bool fewer = current.action.count() < incumbent.action.count();
            const bool more = current.action.count() > incumbent.action.count();
            if ((ties == TiePreference::FewerSensors && fewer) ||
                (ties == TiePreference::MoreSensors && more)) {
                best = summary.costs.size() - 1;
            }
        }
    }
    summary.optimal_action = summary.costs[best].action;
    return summary;
}

} // namespace msm::management
