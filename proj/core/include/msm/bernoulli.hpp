#pragma once

#include "msm/bits.hpp"
#include "msm/metrics.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace msm::bernoulli {

/// Sensing action over N independent sensor regions; bit i decides whether
/// region i is observed this step.
using Action = msm::BitVector;

/// A potential target: it exists with probability `existence` and, if it
/// does, sits exactly at `location`.
struct BernoulliComponent {
    double existence = 0.0;
    Eigen::VectorXd location;
};

/// Independent union of Bernoulli components whose locations are pairwise
/// farther apart than the metric cutoff. That separation is what makes the
/// expected-cost expressions in this library exact, so it is validated at
/// construction time.
class MultiBernoulli {
public:
    MultiBernoulli() = default;
    MultiBernoulli(std::vector<BernoulliComponent> components, const metrics::MetricParams& params,
                   const metrics::DistanceFn& dist = {});

    [[nodiscard]] std::size_t size() const noexcept { return components_.size(); }
    [[nodiscard]] bool empty() const noexcept { return components_.empty(); }
    [[nodiscard]] const std::vector<BernoulliComponent>& components() const noexcept {
        return components_;
    }
    [[nodiscard]] const BernoulliComponent& component(std::size_t i) const {
        return components_.at(i);
    }

    /// Existence probabilities in component order.
    [[nodiscard]] std::vector<double> existences() const;
    /// Locations in component order.
    [[nodiscard]] std::vector<Eigen::VectorXd> locations() const;

private:
    std::vector<BernoulliComponent> components_;
};

/// Belief with the given existence probabilities and 1-D locations 0, 2c,
/// 4c, ... The 2c spacing keeps every pair beyond the cutoff.
[[nodiscard]] MultiBernoulli grid_belief(std::span<const double> existences,
                                         const metrics::MetricParams& params);

/// Detection-only sensor: an existing target in an observed region produces
/// a measurement with probability p^D, and there is no clutter.
class SensorModel {
public:
    explicit SensorModel(double detection_probability);

    [[nodiscard]] double detection_probability() const noexcept { return pd_; }

private:
    double pd_;
};

/// Additive sensing cost: s per active sensor.
class SensingCost {
public:
    explicit SensingCost(double per_sensor_cost);

    [[nodiscard]] double per_sensor_cost() const noexcept { return s_; }
    [[nodiscard]] double total(const Action& action) const noexcept {
        return s_ * static_cast<double>(action.count());
    }

private:
    double s_;
};

/// What one observed region reports: nothing, or a detection of its target.
/// Where the detection landed carries no information here, the target
/// location is already known, so the outcome is purely categorical.
enum class Detection { Empty, Detected };

/// Probability of `outcome` for one component under one action bit.
/// Unobserved regions report Empty with probability one; observed ones
/// report Detected with probability r * p^D.
/// Throws std::invalid_argument if Detected is requested without observing.
[[nodiscard]] double outcome_probability(const BernoulliComponent& component, bool observed,
                                         const SensorModel& sensor, Detection outcome);

/// Bayes update of the existence probability. Not observing leaves r
/// unchanged; a detection pins existence to 1; an empty scan lowers r to
/// r(1 - p^D) / (1 - r p^D).
/// Throws std::domain_error when the requested outcome has probability zero
/// (Empty with r * p^D = 1).
[[nodiscard]] double posterior_existence(double existence, const SensorModel& sensor,
                                         bool observed, Detection outcome);

/// Cardinality distribution rho(0..N) of the multi-Bernoulli with the given
/// existence probabilities: the convolution of the component Bernoulli laws.
[[nodiscard]] std::vector<double> cardinality_distribution(std::span<const double> existences);

/// Cardinality distribution with component `skip` removed.
/// Throws std::out_of_range for an invalid index.
[[nodiscard]] std::vector<double> leave_one_out_cardinality(std::span<const double> existences,
                                                            std::size_t skip);

} // namespace msm::bernoulli
