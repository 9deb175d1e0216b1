#pragma once

#include "msm/bernoulli.hpp"
#include "msm/estimation.hpp"

#include <vector>

namespace msm::management {

using bernoulli::Action;
using bernoulli::MultiBernoulli;
using bernoulli::SensingCost;
using bernoulli::SensorModel;
using estimation::Metric;

/// Two expected action costs are treated as tied when they differ by no more
/// than this, relative to max(1, |a|, |b|). Keeps argmin selection stable on
/// decision-region boundaries.
inline constexpr double kCostTieTolerance = 1e-12;

/// min(r, 1 - r): the expected squared-error factor of the best hard
/// decision on a Bernoulli existence. Throws std::domain_error outside [0, 1].
[[nodiscard]] double t_fn(double existence);

/// Closed-form expected GOSPA cost of one component under one action bit.
/// Not observing costs (c^2/2) t(r); observing costs the posterior-weighted
/// error (c^2/2) t(r(1-p^D)/(1-r p^D)) (1 - r p^D) plus the sensing cost.
/// When r p^D = 1 a detection is certain and the error term vanishes.
[[nodiscard]] double gospa_component_cost(double existence, const SensorModel& sensor,
                                          double cutoff, const SensingCost& sensing,
                                          bool observe);

/// Expected cost of taking `action`, split into its error and sensing parts.
struct ActionCost {
    Action action;
    double expected_ms_error = 0.0;
    double sensing_cost = 0.0;
    double total = 0.0;
};

/// Expected GOSPA cost of a joint action: the per-component closed forms
/// summed, valid because the expected squared GOSPA error is additive over
/// far-apart components. Throws std::invalid_argument on length mismatch.
[[nodiscard]] ActionCost gospa_action_cost(const MultiBernoulli& belief,
                                           const SensorModel& sensor, double cutoff,
                                           const SensingCost& sensing, const Action& action);

/// Closed-form GOSPA decision for one component: observe exactly when
///   2s / (c^2 p^D)  <  r  <  (c^2/2 - s) / (c^2 (1 - p^D/2)).
/// The band is empty once s >= c^2 p^D / 4. Exact cost ties (including the
/// whole s = 0, r >= 1/(2 - p^D) region) resolve to not observing.
[[nodiscard]] bool gospa_closed_form_decision(double existence, const SensorModel& sensor,
                                              double cutoff, const SensingCost& sensing);

/// Expected cost of a joint action under any of the three metrics, by
/// enumerating the detection outcomes of the observed components: each
/// outcome is weighted by its probability and scored with the minimum
/// expected squared error of the posterior belief. This is the general
/// (non-separable) evaluation; for GOSPA it agrees with gospa_action_cost.
/// Throws std::length_error when the belief exceeds the enumeration limit.
[[nodiscard]] ActionCost metric_action_cost(const MultiBernoulli& belief,
                                            const SensorModel& sensor, double cutoff,
                                            const SensingCost& sensing, const Action& action,
                                            Metric metric);

/// How exact cost ties between actions are resolved.
enum class TiePreference {
    FewerSensors, ///< default: prefer the idle sensor
    MoreSensors,  ///< prefer sensing when it costs nothing extra
};

/// Costs of every joint action plus the argmin.
struct DecisionSummary {
    std::vector<ActionCost> costs; ///< in lexicographic action order
    Action optimal_action;
};

/// Evaluates all 2^N joint actions with metric_action_cost and returns the
/// minimiser. Ties resolve by TiePreference on the number of active sensors,
/// then toward the lexicographically smallest action.
[[nodiscard]] DecisionSummary optimal_action(const MultiBernoulli& belief,
                                             const SensorModel& sensor, double cutoff,
                                             const SensingCost& sensing, Metric metric,
                                             TiePreference ties = TiePreference::FewerSensors);

} // namespace msm::management
