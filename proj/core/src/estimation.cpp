#include "msm/estimation.hpp"

#include "msm/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msm::estimation {
namespace {

void check_lengths(std::span<const double> existences, const EstimateMask& mask) {
    if (existences.size() != mask.size()) {
        throw std::invalid_argument("estimate mask length does not match the belief");
    }
}

/// Relative tie test used when ranking masks.
bool tied(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

std::string to_string(Metric metric) {
    switch (metric) {
    case Metric::Gospa: return "gospa";
    case Metric::Ospa: return "ospa";
    case Metric::Uospa: return "uospa";
    }
    throw std::invalid_argument("unknown metric");
}

double msgospa(std::span<const double> existences, const EstimateMask& mask, double cutoff) {
    check_lengths(existences, mask);
    double mismatch = 0.0;
    for (std::size_t i = 0; i < existences.size(); ++i) {
        mismatch += mask[i] ? 1.0 - existences[i] : existences[i];
    }
    return 0.5 * cutoff * cutoff * mismatch;
}

double msospa(std::span<const double> existences, const EstimateMask& mask, double cutoff) {
    check_lengths(existences, mask);
    const std::size_t n_hat = mask.count();
    const double c2 = cutoff * cutoff;
    if (n_hat == 0) {
        const auto rho = bernoulli::cardinality_distribution(existences);
        return c2 * (1.0 - rho[0]);
    }
    // Each reported component is correct only when it exists and is matched,
    // and the matching divides by max(realized cardinality, n_hat).
    double hit = 0.0;
    for (std::size_t i = 0; i < existences.size(); ++i) {
        if (!mask[i]) continue;
        const auto rho_rest = bernoulli::leave_one_out_cardinality(existences, i);
        double weight = 0.0;
        for (std::size_t m = 0; m < rho_rest.size(); ++m) {
            weight += rho_rest[m] / static_cast<double>(std::max(m + 1, n_hat));
        }
        hit += existences[i] * weight;
    }
    return c2 * (1.0 - hit);
}

double msuospa(std::span<const double> existences, const EstimateMask& mask, double cutoff) {
    check_lengths(existences, mask);
    const std::size_t n_hat = mask.count();
    const auto rho = bernoulli::cardinality_distribution(existences);
    double expected_max = 0.0;
    for (std::size_t n = 0; n < rho.size(); ++n) {
        expected_max += rho[n] * static_cast<double>(std::max(n, n_hat));
    }
    double reported_hits = 0.0;
    for (std::size_t i = 0; i < existences.size(); ++i) {
        if (mask[i]) reported_hits += existences[i];
    }
    return cutoff * cutoff * (expected_max - reported_hits);
}

EstimateMask optimal_mask_gospa(std::span<const double> existences) {
    std::vector<bool> bits(existences.size());
    for (std::size_t i = 0; i < existences.size(); ++i) {
        bits[i] = existences[i] > 0.5;
    }
    return EstimateMask(std::move(bits));
}

OptimalMask optimal_mask(std::span<const double> existences, Metric metric, double cutoff,
                         std::size_t enumeration_limit) {
    const std::size_t n = existences.size();
    if (n > enumeration_limit || n >= 64) {
        throw std::length_error("optimal_mask: too many components to enumerate");
    }
    const auto evaluate = [&](const EstimateMask& mask) {
        switch (metric) {
        case Metric::Gospa: return msgospa(existences, mask, cutoff);
        case Metric::Ospa: return msospa(existences, mask, cutoff);
        case Metric::Uospa: return msuospa(existences, mask, cutoff);
        }
        throw std::invalid_argument("unknown metric");
    };
    OptimalMask best{EstimateMask::from_index(0, n), 0.0};
    best.mmse = evaluate(best.mask);
    for (std::uint64_t index = 1; index < (std::uint64_t{1} << n); ++index) {
        EstimateMask mask = EstimateMask::from_index(index, n);
        const double value = evaluate(mask);
        // Enumeration is lexicographic, so on a tie a later mask wins only
        // with strictly fewer reported targets.
        if (value < best.mmse && !tied(value, best.mmse)) {
            best = {std::move(mask), value};
        } else if (tied(value, best.mmse) && mask.count() < best.mask.count()) {
            best = {std::move(mask), value};
        }
    }
    return best;
}

double brute_force_ms(std::span<const double> existences,
                      const std::vector<Eigen::VectorXd>& locations, const EstimateMask& mask,
                      Metric metric, const metrics::MetricParams& params) {
    check_lengths(existences, mask);
    if (locations.size() != existences.size()) {
        throw std::invalid_argument("brute_force_ms: locations length does not match");
    }
    const std::size_t n = existences.size();
    if (n > kBruteForceLimit) {
        throw std::length_error("brute_force_ms: too many components to enumerate");
    }
    metrics::PointSet estimate;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) estimate.add(locations[i]);
    }
    const auto squared_error = [&](const metrics::PointSet& realized) {
        switch (metric) {
        case Metric::Gospa: {
            const double total = metrics::gospa2(realized, estimate, params).total;
            return total * total;
        }
        case Metric::Ospa: {
            const double total = metrics::ospa(realized, estimate, params);
            return total * total;
        }
        case Metric::Uospa: {
            const double total = metrics::uospa(realized, estimate, params);
            return total * total;
        }
        }
        throw std::invalid_argument("unknown metric");
    };
    double expected = 0.0;
    for (std::uint64_t config = 0; config < (std::uint64_t{1} << n); ++config) {
        double weight = 1.0;
        metrics::PointSet realized;
        for (std::size_t i = 0; i < n; ++i) {
            if ((config >> i) & 1u) {
                weight *= existences[i];
                realized.add(locations[i]);
            } else {
                weight *= 1.0 - existences[i];
            }
        }
        if (weight == 0.0) continue;
        expected += weight * squared_error(realized);
    }
    return expected;
}

} // namespace msm::estimation
