#include "msm/io.hpp"
#include "msm/management.hpp"
#include "msm/metrics.hpp"
#include "msm/sweeps.hpp"
#include "msm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// Exit codes: 0 success, 1 failed verification, 2 parse/usage failure,
// 3 dimension mismatch.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kParseFailure = 2;
constexpr int kDimensionMismatch = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    out << text;
}

int run_metric(const std::string& input, std::optional<double> cutoff,
               std::optional<double> order, const std::string& out_path) {
    const msm::io::Scenario scenario = msm::io::parse_scenario_file(input);
    if (!cutoff && !scenario.cutoff) {
        throw msm::io::ParseError("no cutoff: add 'param c <value>' or pass --c");
    }
    const msm::metrics::MetricParams params(cutoff.value_or(scenario.cutoff.value_or(0.0)),
                                            order.value_or(scenario.order.value_or(2.0)));
    const msm::metrics::PointSet x(scenario.x_points);
    const msm::metrics::PointSet y(scenario.y_points);
    const double d_ospa = msm::metrics::ospa(x, y, params);
    const double d_uospa = msm::metrics::uospa(x, y, params);
    const auto d_gospa = msm::metrics::gospa2(x, y, params);
    std::string text;
    text += "ospa " + msm::io::format_value(d_ospa) + "\n";
    text += "uospa " + msm::io::format_value(d_uospa) + "\n";
    text += "gospa " + msm::io::format_value(d_gospa.total) + "\n";
    text += "localisation_cost " + msm::io::format_value(d_gospa.localisation_cost) + "\n";
    text += "missed_cost " + msm::io::format_value(d_gospa.missed_cost) + "\n";
    text += "false_cost " + msm::io::format_value(d_gospa.false_cost) + "\n";
    write_output(text, out_path);
    return kOk;
}

int run_verify(const std::string& scenario_path, std::uint64_t trials, std::uint64_t seed,
               const std::string& out_path) {
    msm::verify::VerifyConfig config;
    config.trials = trials;
    config.seed = seed;
    if (!scenario_path.empty()) {
        const auto scenario = msm::io::parse_scenario_file(scenario_path);
        msm::verify::ScenarioUnderTest under_test{
            scenario.belief(),
            msm::bernoulli::SensorModel(scenario.detection_probability.value_or(1.0)),
            scenario.metric_params().cutoff(),
            msm::bernoulli::SensingCost(scenario.sensing_cost.value_or(0.0))};
        config.scenario = std::move(under_test);
    }
    const auto results = msm::verify::run_verification(config);
    write_output(msm::verify::report(results), out_path);
    return msm::verify::all_passed(results) ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric-driven multi-target sensor management: OSPA/UOSPA/GOSPA set metrics,"
                 " Bernoulli sensing costs, optimal actions, sweeps and verification."};
    app.require_subcommand(1);

    // metric
    auto* metric_cmd =
        app.add_subcommand("metric", "Distances between the point sets of an input file");
    std::string metric_input;
    std::optional<double> metric_c;
    std::optional<double> metric_p;
    std::string metric_out;
    metric_cmd->add_option("input", metric_input, "x/y point-set file")->required();
    metric_cmd->add_option("--c", metric_c, "cutoff override");
    metric_cmd->add_option("--p", metric_p, "order override");
    metric_cmd->add_option("--out", metric_out, "write to file instead of stdout");

    // cost-curve
    auto* curve_cmd = app.add_subcommand(
        "cost-curve", "Single-sensor GOSPA costs c(0), c(1) against existence (CSV)");
    msm::sweeps::CostCurveSpec curve;
    std::string curve_out;
    curve_cmd->add_option("--c", curve.cutoff, "metric cutoff")->capture_default_str();
    curve_cmd->add_option("--pd", curve.detection_probability, "detection probability")
        ->capture_default_str();
    curve_cmd->add_option("--s", curve.sensing_costs, "sensing costs (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    curve_cmd->add_option("--grid-step", curve.existence.step, "existence grid step")
        ->capture_default_str();
    curve_cmd->add_option("--out", curve_out, "write to file instead of stdout");

    // region1
    auto* region1_cmd = app.add_subcommand(
        "region1", "Closed-form GOSPA decision over the (r, s) plane (CSV)");
    msm::sweeps::Region1Spec region1;
    std::string region1_out;
    region1_cmd->add_option("--c", region1.cutoff, "metric cutoff")->capture_default_str();
    region1_cmd->add_option("--pd", region1.detection_probability, "detection probability")
        ->capture_default_str();
    region1_cmd->add_option("--grid-step", region1.existence.step, "existence grid step")
        ->capture_default_str();
    region1_cmd->add_option("--s-min", region1.sensing.min, "sensing grid start")
        ->capture_default_str();
    region1_cmd->add_option("--s-max", region1.sensing.max, "sensing grid end")
        ->capture_default_str();
    region1_cmd->add_option("--s-step", region1.sensing.step, "sensing grid step")
        ->capture_default_str();
    region1_cmd->add_option("--out", region1_out, "write to file instead of stdout");

    // region2
    auto* region2_cmd = app.add_subcommand(
        "region2", "Optimal two-sensor actions over the (r1, r2) plane (CSV)");
    msm::sweeps::Region2Spec region2;
    std::string region2_metrics = "all";
    std::string region2_out;
    region2_cmd->add_option("--c", region2.cutoff, "metric cutoff")->capture_default_str();
    region2_cmd->add_option("--pd", region2.detection_probability, "detection probability")
        ->capture_default_str();
    region2_cmd->add_option("--s", region2.sensing_cost, "per-sensor cost")
        ->capture_default_str();
    region2_cmd->add_option("--grid-step", region2.r1.step, "existence grid step")
        ->capture_default_str();
    region2_cmd->add_option("--metric", region2_metrics, "gospa|ospa|uospa|all")
        ->capture_default_str();
    region2_cmd->add_option("--out", region2_out, "write to file instead of stdout");

    // slice
    auto* slice_cmd = app.add_subcommand(
        "slice", "Optimal two-sensor actions against r1 with r2 fixed (CSV)");
    msm::sweeps::SliceSpec slice;
    std::string slice_metrics = "all";
    std::string slice_out;
    slice_cmd->add_option("--c", slice.cutoff, "metric cutoff")->capture_default_str();
    slice_cmd->add_option("--pd", slice.detection_probability, "detection probability")
        ->capture_default_str();
    slice_cmd->add_option("--s", slice.sensing_cost, "per-sensor cost")->capture_default_str();
    slice_cmd->add_option("--r2", slice.r2, "fixed existence of the second component")
        ->capture_default_str();
    slice_cmd->add_option("--grid-step", slice.r1.step, "existence grid step")
        ->capture_default_str();
    slice_cmd->add_option("--metric", slice_metrics, "gospa|ospa|uospa|all")
        ->capture_default_str();
    slice_cmd->add_option("--out", slice_out, "write to file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the oracle, separability, entanglement and Monte-Carlo checks");
    std::string verify_scenario;
    std::uint64_t verify_trials = 100000;
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    verify_cmd->add_option("--scenario", verify_scenario, "scenario file (default built-ins)");
    verify_cmd->add_option("--trials", verify_trials, "Monte-Carlo trials")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Monte-Carlo seed")->capture_default_str();
    verify_cmd->add_option("--out", verify_out, "write report to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseFailure;
    }

    try {
        if (*metric_cmd) {
            return run_metric(metric_input, metric_c, metric_p, metric_out);
        }
        if (*curve_cmd) {
            write_output(msm::sweeps::cost_curve_csv(curve), curve_out);
            return kOk;
        }
        if (*region1_cmd) {
            write_output(msm::sweeps::region1_csv(region1), region1_out);
            return kOk;
        }
        if (*region2_cmd) {
            region2.r2.step = region2.r1.step;
            region2.metrics = msm::io::parse_metric_selection(region2_metrics);
            write_output(msm::sweeps::region2_csv(region2), region2_out);
            return kOk;
        }
        if (*slice_cmd) {
            slice.metrics = msm::io::parse_metric_selection(slice_metrics);
            write_output(msm::sweeps::slice_csv(slice), slice_out);
            return kOk;
        }
        if (*verify_cmd) {
            return run_verify(verify_scenario, verify_trials, verify_seed, verify_out);
        }
    } catch (const msm::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const msm::metrics::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDimensionMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseFailure;
    }
    return kParseFailure;
}
