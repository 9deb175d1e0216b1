#pragma once

#include "msm/bits.hpp"
#include "msm/metrics.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace msm::estimation {

enum class Metric { Gospa, Ospa, Uospa };

[[nodiscard]] std::string to_string(Metric metric);

/// Detection estimate: bit i = 1 reports component i at its known location.
using EstimateMask = msm::BitVector;

/// Largest N for which optimal_mask enumerates all 2^N masks.
inline constexpr std::size_t kMaskEnumerationLimit = 16;
/// Largest N accepted by the brute-force oracle (2^N existence configs).
inline constexpr std::size_t kBruteForceLimit = 20;

/// Expected squared GOSPA error of reporting `mask` under the far-apart
/// point-mass belief with the given existence probabilities:
/// (c^2/2) * sum_i [ r_i (1 - e_i) + (1 - r_i) e_i ].
/// Additive over components, which is what keeps GOSPA decisions local.
[[nodiscard]] double msgospa(std::span<const double> existences, const EstimateMask& mask,
                             double cutoff);

/// Expected squared OSPA error of reporting `mask`. Couples the components
/// through the cardinality distribution: with n detections reported,
/// c^2 * (1 - sum_i e_i r_i sum_m rho_{-i}(m) / max(m+1, n)), and
/// c^2 * (1 - rho(0)) for the empty report.
[[nodiscard]] double msospa(std::span<const double> existences, const EstimateMask& mask,
                            double cutoff);

/// Expected squared unnormalised-OSPA error of reporting `mask`:
/// c^2 * ( E[max(cardinality, n)] - sum_i e_i r_i ).
[[nodiscard]] double msuospa(std::span<const double> existences, const EstimateMask& mask,
                             double cutoff);

/// Mask minimising the expected squared GOSPA error: report component i
/// exactly when r_i > 0.5 (an exact tie at 0.5 resolves to not reporting;
/// both choices cost the same).
[[nodiscard]] EstimateMask optimal_mask_gospa(std::span<const double> existences);

struct OptimalMask {
    EstimateMask mask;
    double mmse = 0.0;
};

/// Minimiser of the expected squared error over all 2^N masks, by
/// enumeration. Ties (within 1e-12 relative) resolve toward fewer reported
/// targets, then the lexicographically smallest mask.
/// Throws std::length_error when N exceeds the enumeration limit.
[[nodiscard]] OptimalMask optimal_mask(std::span<const double> existences, Metric metric,
                                       double cutoff,
                                       std::size_t enumeration_limit = kMaskEnumerationLimit);

/// Independent oracle for the expected squared metric errors: enumerates all
/// 2^N existence configurations and scores each realized set against the
/// masked estimate with the chosen set metric (order p = 2). The locations
/// must be pairwise separated by more than the cutoff.
/// Throws std::length_error when N exceeds kBruteForceLimit.
[[nodiscard]] double brute_force_ms(std::span<const double> existences,
                                    const std::vector<Eigen::VectorXd>& locations,
                                    const EstimateMask& mask, Metric metric,
                                    const metrics::MetricParams& params);

} // namespace msm::estimation
