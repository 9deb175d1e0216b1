#include "msm/sweeps.hpp"

#include "msm/bernoulli.hpp"
#include "msm/io.hpp"
#include "msm/management.hpp"

#include <cmath>
#include <stdexcept>

namespace msm::sweeps {
namespace {

using bernoulli::SensingCost;
using bernoulli::SensorModel;

std::string row(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& cell : cells) {
        if (!out.empty()) out.push_back(',');
        out += cell;
    }
    out.push_back('\n');
    return out;
}

std::string num(double v) {
    return io::format_value(v);
}

std::string bit(bool b) {
    return b ? "1" : "0";
}

} // namespace

std::vector<double> grid(const Range& range) {
    if (!(range.step > 0.0)) {
        throw std::invalid_argument("grid: step must be > 0");
    }
    if (!(range.min <= range.max)) {
        throw std::invalid_argument("grid: min must be <= max");
    }
    const double span = range.max - range.min;
    const auto count = static_cast<std::size_t>(std::floor(span / range.step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(range.min + static_cast<double>(k) * range.step);
    }
    return out;
}

std::string cost_curve_csv(const CostCurveSpec& spec) {
    const SensorModel sensor(spec.detection_probability);
    std::string csv = "r,s,cost_a0,cost_a1\n";
    for (double s : spec.sensing_costs) {
        const SensingCost sensing(s);
        for (double r : grid(spec.existence)) {
            const double a0 =
                management::gospa_component_cost(r, sensor, spec.cutoff, sensing, false);
            const double a1 =
                management::gospa_component_cost(r, sensor, spec.cutoff, sensing, true);
            csv += row({num(r), num(s), num(a0), num(a1)});
        }
    }
    return csv;
}

std::string region1_csv(const Region1Spec& spec) {
    const SensorModel sensor(spec.detection_probability);
    std::string csv = "r,s,optimal_a\n";
    for (double r : grid(spec.existence)) {
        for (double s : grid(spec.sensing)) {
            const bool observe =
                management::gospa_closed_form_decision(r, sensor, spec.cutoff, SensingCost(s));
            csv += row({num(r), num(s), bit(observe)});
        }
    }
    return csv;
}

std::string region2_csv(const Region2Spec& spec) {
    const SensorModel sensor(spec.detection_probability);
    const SensingCost sensing(spec.sensing_cost);
    const metrics::MetricParams params(spec.cutoff, 2.0);
    std::string csv = "r1,r2,metric,a1,a2\n";
    for (double r1 : grid(spec.r1)) {
        for (double r2 : grid(spec.r2)) {
            const auto belief = bernoulli::grid_belief(std::vector<double>{r1, r2}, params);
            for (Metric metric : spec.metrics) {
                const auto decision =
                    management::optimal_action(belief, sensor, spec.cutoff, sensing, metric);
                csv += row({num(r1), num(r2), io::metric_name(metric),
                            bit(decision.optimal_action[0]), bit(decision.optimal_action[1])});
            }
        }
    }
    return csv;
}

std::string slice_csv(const SliceSpec& spec) {
    const SensorModel sensor(spec.detection_probability);
    const SensingCost sensing(spec.sensing_cost);
    const metrics::MetricParams params(spec.cutoff, 2.0);
    std::string csv = "r1,metric,a1,a2\n";
    for (double r1 : grid(spec.r1)) {
        const auto belief = bernoulli::grid_belief(std::vector<double>{r1, spec.r2}, params);
        for (Metric metric : spec.metrics) {
            const auto decision =
                management::optimal_action(belief, sensor, spec.cutoff, sensing, metric);
            csv += row({num(r1), io::metric_name(metric), bit(decision.optimal_action[0]),
                        bit(decision.optimal_action[1])});
        }
    }
    return csv;
}

} // namespace msm::sweeps
