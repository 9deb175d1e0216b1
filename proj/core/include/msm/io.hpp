#pragma once

#include "msm/bernoulli.hpp"
#include "msm/estimation.hpp"
#include "msm/metrics.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msm::io {

/// Raised on malformed input files; the message carries the line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of the line-oriented input format. One directive per line:
///
///   param <key> <value>       keys: c, p, pd, s
///   component <r> <x1> [x2 ...]
///   x <x1> [x2 ...]           point of set X (metric inputs)
///   y <y1> [y2 ...]           point of set Y
///
/// Blank lines and lines starting with '#' are ignored.
struct Scenario {
    std::optional<double> cutoff;
    std::optional<double> order;
    std::optional<double> detection_probability;
    std::optional<double> sensing_cost;
    std::vector<bernoulli::BernoulliComponent> components;
    std::vector<Eigen::VectorXd> x_points;
    std::vector<Eigen::VectorXd> y_points;

    /// MetricParams from the file, with `p` defaulting to 2.
    /// Throws ParseError if `c` is missing.
    [[nodiscard]] metrics::MetricParams metric_params() const;

    /// Belief from the component lines, separation-checked against
    /// metric_params(). Throws ParseError when `c` or components are missing.
    [[nodiscard]] bernoulli::MultiBernoulli belief() const;
};

[[nodiscard]] Scenario parse_scenario(std::istream& in);
[[nodiscard]] Scenario parse_scenario_file(const std::string& path);

/// Shortest decimal form with 12 significant digits ("%.12g").
[[nodiscard]] std::string format_value(double v);

/// Lower-case metric name: "gospa", "ospa", "uospa".
[[nodiscard]] std::string metric_name(estimation::Metric metric);

/// Parses "gospa", "ospa", "uospa" or "all" (case-sensitive) into the metric
/// list, in fixed gospa, ospa, uospa order for "all".
/// Throws std::invalid_argument on anything else.
[[nodiscard]] std::vector<estimation::Metric> parse_metric_selection(const std::string& name);

} // namespace msm::io
