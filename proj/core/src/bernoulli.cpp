#include "msm/bernoulli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msm::bernoulli {
namespace {

void check_existence(double r, const char* what) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": existence must be in [0, 1]");
    }
}

} // namespace

MultiBernoulli::MultiBernoulli(std::vector<BernoulliComponent> components,
                               const metrics::MetricParams& params,
                               const metrics::DistanceFn& dist)
    : components_(std::move(components)) {
    for (const auto& component : components_) {
        check_existence(component.existence, "MultiBernoulli");
        if (component.location.size() == 0) {
            throw std::invalid_argument("MultiBernoulli: locations must have dimension >= 1");
        }
        if (component.location.size() != components_.front().location.size()) {
            throw metrics::DimensionMismatch("MultiBernoulli: mixed location dimensions");
        }
    }
    // Everything downstream assumes components interact only through
    // cardinality, which needs every pair farther apart than the cutoff.
    for (std::size_t i = 0; i < components_.size(); ++i) {
        for (std::size_t j = i + 1; j < components_.size(); ++j) {
            const double d = dist ? dist(components_[i].location, components_[j].location)
                                  : metrics::base_distance(components_[i].location,
                                                           components_[j].location);
            if (!(d > params.cutoff())) {
                throw std::invalid_argument(
                    "MultiBernoulli: components " + std::to_string(i) + " and " +
                    std::to_string(j) + " are within the metric cutoff");
            }
        }
    }
}

std::vector<double> MultiBernoulli::existences() const {
    std::vector<double> out;
    out.reserve(components_.size());
    for (const auto& component : components_) {
        out.push_back(component.existence);
    }
    return out;
}

std::vector<Eigen::VectorXd> MultiBernoulli::locations() const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(components_.size());
    for (const auto& component : components_) {
        out.push_back(component.location);
    }
    return out;
}

MultiBernoulli grid_belief(std::span<const double> existences,
                           const metrics::MetricParams& params) {
    std::vector<BernoulliComponent> components;
    components.reserve(existences.size());
    for (std::size_t i = 0; i < existences.size(); ++i) {
        Eigen::VectorXd location(1);
        location << 2.0 * params.cutoff() * static_cast<double>(i);
        components.push_back({existences[i], std::move(location)});
    }
    return {std::move(components), params};
}

SensorModel::SensorModel(double detection_probability) : pd_(detection_probability) {
    if (!(pd_ >= 0.0 && pd_ <= 1.0)) {
        throw std::invalid_argument("SensorModel: detection probability must be in [0, 1]");
    }
}

SensingCost::SensingCost(double per_sensor_cost) : s_(per_sensor_cost) {
    if (!(s_ >= 0.0) || !std::isfinite(s_)) {
        throw std::invalid_argument("SensingCost: per-sensor cost must be finite and >= 0");
    }
}

double outcome_probability(const BernoulliComponent& component, bool observed,
                           const SensorModel& sensor, Detection outcome) {
    check_existence(component.existence, "outcome_probability");
    if (!observed) {
        if (outcome == Detection::Detected) {
            throw std::invalid_argument(
                "outcome_probability: an unobserved region cannot report a detection");
        }
        return 1.0;
    }
    const double detect = component.existence * sensor.detection_probability();
    return outcome == Detection::Detected ? detect : 1.0 - detect;
}

double posterior_existence(double existence, const SensorModel& sensor, bool observed,
                           Detection outcome) {
    check_existence(existence, "posterior_existence");
    if (!observed) {
        if (outcome == Detection::Detected) {
            throw std::invalid_argument(
                "posterior_existence: an unobserved region cannot report a detection");
        }
        return existence;
    }
    if (outcome == Detection::Detected) {
        return 1.0;
    }
    const double miss = 1.0 - existence * sensor.detection_probability();
    if (miss <= 0.0) {
        throw std::domain_error(
            "posterior_existence: empty outcome has probability zero when r * pd = 1");
    }
    return existence * (1.0 - sensor.detection_probability()) / miss;
}

std::vector<double> cardinality_distribution(std::span<const double> existences) {
    std::vector<double> rho{1.0};
    rho.reserve(existences.size() + 1);
    for (double r : existences) {
        check_existence(r, "cardinality_distribution");
        rho.push_back(0.0);
        for (std::size_t n = rho.size() - 1; n > 0; --n) {
            rho[n] = rho[n] * (1.0 - r) + rho[n - 1] * r;
        }
        rho[0] *= 1.0 - r;
    }
    return rho;
}

std::vector<double> leave_one_out_cardinality(std::span<const double> existences,
                                              std::size_t skip) {
    if (skip >= existences.size()) {
        throw std::out_of_range("leave_one_out_cardinality: component index out of range");
    }
    std::vector<double> rest;
    rest.reserve(existences.size() - 1);
    for (std::size_t i = 0; i < existences.size(); ++i) {
        if (i != skip) rest.push_back(existences[i]);
    }
    return cardinality_distribution(rest);
}

} // namespace msm::bernoulli
