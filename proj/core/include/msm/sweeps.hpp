#pragma once

#include "msm/estimation.hpp"

#include <string>
#include <vector>

namespace msm::sweeps {

using estimation::Metric;

/// Inclusive arithmetic grid. Requires step > 0 and min <= max.
struct Range {
    double min = 0.0;
    double max = 1.0;
    double step = 0.01;
};

/// min, min + step, ... up to max (included when it lands on the grid,
/// within a 1e-9 relative slack against accumulated rounding).
[[nodiscard]] std::vector<double> grid(const Range& range);

/// Expected single-sensor GOSPA costs c(0) and c(1) over an existence grid,
/// one block per sensing cost. CSV columns: r,s,cost_a0,cost_a1.
struct CostCurveSpec {
    double cutoff = 10.0;
    double detection_probability = 0.7;
    std::vector<double> sensing_costs = {0.0, 10.0, 20.0};
    Range existence = {0.0, 1.0, 0.01};
};
[[nodiscard]] std::string cost_curve_csv(const CostCurveSpec& spec);

/// Closed-form GOSPA decision over an (existence, sensing cost) grid.
/// CSV columns: r,s,optimal_a. Rows sweep r outer, s inner.
struct Region1Spec {
    double cutoff = 10.0;
    double detection_probability = 0.7;
    Range existence = {0.0, 1.0, 0.01};
    Range sensing = {0.0, 30.0, 0.25};
};
[[nodiscard]] std::string region1_csv(const Region1Spec& spec);

/// Optimal two-sensor actions over an (r1, r2) grid for the selected
/// metrics. CSV columns: r1,r2,metric,a1,a2. Rows sweep r1 outer, r2 inner,
/// then metric in the listed order.
struct Region2Spec {
    double cutoff = 10.0;
    double detection_probability = 0.6;
    double sensing_cost = 10.0;
    Range r1 = {0.0, 1.0, 0.01};
    Range r2 = {0.0, 1.0, 0.01};
    std::vector<Metric> metrics = {Metric::Gospa, Metric::Ospa, Metric::Uospa};
};
[[nodiscard]] std::string region2_csv(const Region2Spec& spec);

/// One-dimensional cut of the two-sensor problem: r2 held fixed, r1 swept.
/// CSV columns: r1,metric,a1,a2.
struct SliceSpec {
    double cutoff = 10.0;
    double detection_probability = 0.6;
    double sensing_cost = 10.0;
    double r2 = 0.6;
    Range r1 = {0.0, 1.0, 0.01};
    std::vector<Metric> metrics = {Metric::Ospa, Metric::Uospa};
};
[[nodiscard]] std::string slice_csv(const SliceSpec& spec);

} // namespace msm::sweeps
