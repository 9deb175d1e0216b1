#include "msm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace msm::io {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& token, std::size_t line) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + token + "'");
    }
    if (consumed != token.size()) {
        fail(line, "trailing characters in number '" + token + "'");
    }
    return value;
}

Eigen::VectorXd parse_point(const std::vector<std::string>& tokens, std::size_t line) {
    if (tokens.size() < 2) {
        fail(line, "expected at least one coordinate");
    }
    Eigen::VectorXd point(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        point[static_cast<Eigen::Index>(i - 1)] = parse_number(tokens[i], line);
    }
    return point;
}

} // namespace

metrics::MetricParams Scenario::metric_params() const {
    if (!cutoff) {
        throw ParseError("missing 'param c' line");
    }
    try {
        return {*cutoff, order.value_or(2.0)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

bernoulli::MultiBernoulli Scenario::belief() const {
    if (components.empty()) {
        throw ParseError("scenario has no 'component' lines");
    }
    try {
        return {components, metric_params()};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Scenario parse_scenario(std::istream& in) {
    Scenario scenario;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::vector<std::string> tokens;
        std::string token;
        while (words >> token) {
            if (token.front() == '#') break;
            tokens.push_back(token);
        }
        if (tokens.empty()) continue;
        const std::string& directive = tokens.front();
        if (directive == "param") {
            if (tokens.size() != 3) fail(line_no, "expected 'param <key> <value>'");
            const double value = parse_number(tokens[2], line_no);
            if (tokens[1] == "c") {
                scenario.cutoff = value;
            } else if (tokens[1] == "p") {
                scenario.order = value;
            } else if (tokens[1] == "pd") {
                scenario.detection_probability = value;
            } else if (tokens[1] == "s") {
                scenario.sensing_cost = value;
            } else {
                fail(line_no, "unknown parameter '" + tokens[1] + "'");
            }
        } else if (directive == "component") {
            if (tokens.size() < 3) fail(line_no, "expected 'component <r> <x1> [x2 ...]'");
            bernoulli::BernoulliComponent component;
            component.existence = parse_number(tokens[1], line_no);
            component.location = Eigen::VectorXd(tokens.size() - 2);
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                component.location[static_cast<Eigen::Index>(i - 2)] =
                    parse_number(tokens[i], line_no);
            }
            scenario.components.push_back(std::move(component));
        } else if (directive == "x") {
            scenario.x_points.push_back(parse_point(tokens, line_no));
        } else if (directive == "y") {
            scenario.y_points.push_back(parse_point(tokens, line_no));
        } else {
            fail(line_no, "unknown directive '" + directive + "'");
        }
    }
    return scenario;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return parse_scenario(in);
}

std::string format_value(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string metric_name(estimation::Metric metric) {
    return estimation::to_string(metric);
}

std::vector<estimation::Metric> parse_metric_selection(const std::string& name) {
    using estimation::Metric;
    if (name == "gospa") return {Metric::Gospa};
    if (name == "ospa") return {Metric::Ospa};
    if (name == "uospa") return {Metric::Uospa};
    if (name == "all") return {Metric::Gospa, Metric::Ospa, Metric::Uospa};
    throw std::invalid_argument("unknown metric '" + name + "' (use gospa|ospa|uospa|all)");
}

} // namespace msm::io
