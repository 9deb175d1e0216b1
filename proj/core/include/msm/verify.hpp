#pragma once

#include "msm/bernoulli.hpp"
#include "msm/montecarlo.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msm::verify {

/// A belief plus sensor setup the verification checks can be pointed at.
struct ScenarioUnderTest {
    bernoulli::MultiBernoulli belief;
    bernoulli::SensorModel sensor{1.0};
    double cutoff = 10.0;
    bernoulli::SensingCost sensing{0.0};
};

struct VerifyConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    /// Closed forms vs the brute-force oracle.
    double oracle_tolerance = 1e-10;
    /// GOSPA additive costs vs the enumerated ones.
    double separability_tolerance = 1e-10;
    /// Monte-Carlo mean vs analytic cost, in standard errors.
    double mc_sigma = 4.0;
    /// When set, the oracle, separability and Monte-Carlo checks run on this
    /// scenario instead of the built-in ones. The entanglement witness keeps
    /// its fixed two-sensor setup either way.
    std::optional<ScenarioUnderTest> scenario;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; ///< deterministic summary, e.g. worst deviation seen
};

/// Runs the four consistency checks: "oracle-equivalence",
/// "gospa-separability", "entanglement", "monte-carlo".
[[nodiscard]] std::vector<CheckResult> run_verification(const VerifyConfig& config);

/// One line per check plus a tally; byte-stable for fixed config.
[[nodiscard]] std::string report(const std::vector<CheckResult>& results);

[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results);

} // namespace msm::verify
