#include "msm/metrics.hpp"

#include "msm/montecarlo.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace {

using msm::mc::SplitMix64;
using msm::metrics::Assignment;
using msm::metrics::base_distance;
using msm::metrics::DimensionMismatch;
using msm::metrics::gospa2;
using msm::metrics::MetricParams;
using msm::metrics::ospa;
using msm::metrics::PointSet;
using msm::metrics::solve_assignment;
using msm::metrics::uospa;

Eigen::VectorXd vec(std::initializer_list<double> coords) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) out[i++] = c;
    return out;
}

PointSet set_of(std::initializer_list<std::initializer_list<double>> points) {
    PointSet out;
    for (const auto& p : points) out.add(vec(p));
    return out;
}

PointSet random_set(std::size_t size, Eigen::Index dim, SplitMix64& rng) {
    PointSet out;
    for (std::size_t i = 0; i < size; ++i) {
        Eigen::VectorXd point(dim);
        for (Eigen::Index d = 0; d < dim; ++d) point[d] = 30.0 * rng.next_uniform() - 15.0;
        out.add(point);
    }
    return out;
}

// Exhaustive OSPA: minimum over all permutations of the larger side.
double ospa_brute(const PointSet& x, const PointSet& y, const MetricParams& params,
                  bool normalised) {
    const PointSet& small = x.size() <= y.size() ? x : y;
    const PointSet& large = x.size() <= y.size() ? y : x;
    const double c = params.cutoff();
    const double p = params.order();
    if (large.empty()) return 0.0;
    std::vector<std::size_t> perm(large.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double sum = 0.0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            sum += std::pow(std::min(base_distance(small[i], large[perm[i]]), c), p);
        }
        best = std::min(best, sum);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const double penalised =
        best + std::pow(c, p) * static_cast<double>(large.size() - small.size());
    const double scaled = normalised ? penalised / static_cast<double>(large.size()) : penalised;
    return std::pow(scaled, 1.0 / p);
}

// Exhaustive GOSPA (alpha = 2): minimum over all partial injective
// assignments between the two sets.
double gospa_brute_pth(const PointSet& x, const PointSet& y, const MetricParams& params) {
    const double cp = std::pow(params.cutoff(), params.order());
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> assigned_col(x.size(), -1);
    std::vector<bool> col_used(y.size(), false);
    const auto recurse = [&](auto&& self, std::size_t row) -> void {
        if (row == x.size()) {
            double sum = 0.0;
            std::size_t pairs = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (assigned_col[i] >= 0) {
                    sum += std::pow(base_distance(x[i], y[static_cast<std::size_t>(assigned_col[i])]),
                                    params.order());
                    ++pairs;
                }
            }
            sum += 0.5 * cp *
                   static_cast<double>(x.size() + y.size() - 2 * pairs);
            best = std::min(best, sum);
            return;
        }
        assigned_col[row] = -1;
        self(self, row + 1);
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (col_used[j]) continue;
            col_used[j] = true;
            assigned_col[row] = static_cast<int>(j);
            self(self, row + 1);
            assigned_col[row] = -1;
            col_used[j] = false;
        }
    };
    recurse(recurse, 0);
    return best;
}

// All minimum-cost full matchings of the smaller side, as sorted pair lists.
void enumerate_matchings(const Eigen::MatrixXd& cost,
                         std::vector<std::pair<double, std::vector<std::pair<int, int>>>>* out) {
    const int m = static_cast<int>(cost.rows());
    const int n = static_cast<int>(cost.cols());
    if (m <= n) {
        std::vector<int> cols(n);
        std::iota(cols.begin(), cols.end(), 0);
        std::vector<int> pick(m);
        const auto recurse = [&](auto&& self, int row, std::vector<bool>& used,
                                 double acc) -> void {
            if (row == m) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < m; ++i) pairs.emplace_back(i, pick[i]);
                out->emplace_back(acc, std::move(pairs));
                return;
            }
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                used[j] = true;
                pick[row] = j;
                self(self, row + 1, used, acc + cost(row, j));
                used[j] = false;
            }
        };
        std::vector<bool> used(n, false);
        recurse(recurse, 0, used, 0.0);
    } else {
        std::vector<std::pair<double, std::vector<std::pair<int, int>>>> transposed;
        enumerate_matchings(cost.transpose(), &transposed);
        for (auto& [value, pairs] : transposed) {
            for (auto& [i, j] : pairs) std::swap(i, j);
            std::sort(pairs.begin(), pairs.end());
            out->emplace_back(value, std::move(pairs));
        }
    }
}

TEST(BaseDistance, Examples) {
    EXPECT_DOUBLE_EQ(base_distance(vec({0}), vec({0})), 0.0);
    EXPECT_DOUBLE_EQ(base_distance(vec({0}), vec({3})), 3.0);
    EXPECT_DOUBLE_EQ(base_distance(vec({3, 4}), vec({0, 0})), 5.0);
}

TEST(BaseDistance, SymmetricAndRejectsMixedDimensions) {
    EXPECT_DOUBLE_EQ(base_distance(vec({1, 2}), vec({4, 6})),
                     base_distance(vec({4, 6}), vec({1, 2})));
    EXPECT_THROW((void)base_distance(vec({1}), vec({1, 2})), DimensionMismatch);
}

TEST(SolveAssignment, Examples) {
    Eigen::MatrixXd diag(2, 2);
    diag << 0, 5, 5, 0;
    const Assignment a = solve_assignment(diag);
    EXPECT_EQ(a.pairs, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
    EXPECT_DOUBLE_EQ(a.cost, 0.0);

    Eigen::MatrixXd one(1, 1);
    one << 2;
    const Assignment b = solve_assignment(one);
    EXPECT_EQ(b.pairs, (std::vector<std::pair<int, int>>{{0, 0}}));
    EXPECT_DOUBLE_EQ(b.cost, 2.0);

    Eigen::MatrixXd trap(2, 2);
    trap << 1, 2, 2, 100;
    const Assignment c = solve_assignment(trap);
    EXPECT_EQ(c.pairs, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
    EXPECT_DOUBLE_EQ(c.cost, 4.0);
}

TEST(SolveAssignment, TiesResolveLexicographically) {
    Eigen::MatrixXd flat(3, 3);
    flat.setOnes();
    const Assignment a = solve_assignment(flat);
    EXPECT_EQ(a.pairs, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}}));
}

TEST(SolveAssignment, RejectsNonFinite) {
    Eigen::MatrixXd bad(1, 2);
    bad << 1.0, std::numeric_limits<double>::infinity();
    EXPECT_THROW((void)solve_assignment(bad), std::invalid_argument);
}

TEST(SolveAssignment, EmptyMatrix) {
    EXPECT_TRUE(solve_assignment(Eigen::MatrixXd(0, 3)).pairs.empty());
    EXPECT_TRUE(solve_assignment(Eigen::MatrixXd(3, 0)).pairs.empty());
}

TEST(SolveAssignment, MatchesExhaustiveEnumerationIncludingTies) {
    SplitMix64 rng(2024);
    for (int draw = 0; draw < 200; ++draw) {
        const int m = 1 + static_cast<int>(rng.next() % 4);
        const int n = 1 + static_cast<int>(rng.next() % 4);
        Eigen::MatrixXd cost(m, n);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                // Small integer costs force plenty of exact ties.
                cost(i, j) = static_cast<double>(rng.next() % 3);
            }
        }
        std::vector<std::pair<double, std::vector<std::pair<int, int>>>> all;
        enumerate_matchings(cost, &all);
        const double best =
            std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
                return a.first < b.first;
            })->first;
        std::vector<std::pair<int, int>> expected;
        for (const auto& [value, pairs] : all) {
            if (value > best + 1e-12) continue;
            if (expected.empty() || pairs < expected) expected = pairs;
        }
        const Assignment got = solve_assignment(cost);
        EXPECT_EQ(got.pairs, expected) << "draw " << draw;
        EXPECT_NEAR(got.cost, best, 1e-12);
    }
}

TEST(Ospa, Examples) {
    const MetricParams params(10.0, 2.0);
    EXPECT_DOUBLE_EQ(ospa(set_of({}), set_of({}), params), 0.0);
    EXPECT_DOUBLE_EQ(ospa(set_of({}), set_of({{7}}), params), 10.0);
    EXPECT_NEAR(ospa(set_of({{0}}), set_of({{0}, {100}}), params), std::sqrt(50.0), 1e-12);
}

TEST(Uospa, Examples) {
    const MetricParams params(10.0, 2.0);
    EXPECT_DOUBLE_EQ(uospa(set_of({}), set_of({}), params), 0.0);
    EXPECT_DOUBLE_EQ(uospa(set_of({{0}}), set_of({{0}, {100}}), params), 10.0);
    EXPECT_NEAR(uospa(set_of({}), set_of({{0}, {100}}), params), 10.0 * std::sqrt(2.0), 1e-12);
}

TEST(Gospa2, Examples) {
    const MetricParams params(10.0, 2.0);
    const auto identical = gospa2(set_of({{1}, {2}}), set_of({{1}, {2}}), params);
    EXPECT_DOUBLE_EQ(identical.total, 0.0);
    EXPECT_DOUBLE_EQ(identical.localisation_cost, 0.0);
    EXPECT_DOUBLE_EQ(identical.missed_cost, 0.0);
    EXPECT_DOUBLE_EQ(identical.false_cost, 0.0);

    const auto missed = gospa2(set_of({{0}}), set_of({}), params);
    EXPECT_NEAR(missed.total * missed.total, 50.0, 1e-12);
    EXPECT_DOUBLE_EQ(missed.missed_cost, 50.0);
    EXPECT_DOUBLE_EQ(missed.false_cost, 0.0);

    const auto matched = gospa2(set_of({{0}}), set_of({{0}, {100}}), params);
    EXPECT_NEAR(matched.total * matched.total, 50.0, 1e-12);
    EXPECT_DOUBLE_EQ(matched.localisation_cost, 0.0);
    EXPECT_DOUBLE_EQ(matched.missed_cost, 0.0);
    EXPECT_DOUBLE_EQ(matched.false_cost, 50.0);
}

TEST(Gospa2, PairAtCutoffBecomesMissedPlusFalse) {
    const MetricParams params(10.0, 2.0);
    const auto at_cutoff = gospa2(set_of({{0}}), set_of({{10}}), params);
    EXPECT_DOUBLE_EQ(at_cutoff.localisation_cost, 0.0);
    EXPECT_DOUBLE_EQ(at_cutoff.missed_cost, 50.0);
    EXPECT_DOUBLE_EQ(at_cutoff.false_cost, 50.0);
    const auto inside = gospa2(set_of({{0}}), set_of({{10.0 - 1e-9}}), params);
    EXPECT_GT(inside.localisation_cost, 0.0);
    EXPECT_DOUBLE_EQ(inside.missed_cost, 0.0);
}

TEST(Gospa2, RejectsMixedDimensions) {
    const MetricParams params(10.0, 2.0);
    EXPECT_THROW((void)gospa2(set_of({{0}}), set_of({{0, 0}}), params), DimensionMismatch);
    EXPECT_THROW((void)ospa(set_of({{0}}), set_of({{0, 0}}), params), DimensionMismatch);
    EXPECT_THROW((void)uospa(set_of({{0}}), set_of({{0, 0}}), params), DimensionMismatch);
}

TEST(Metrics, CustomBaseDistance) {
    const MetricParams params(10.0, 1.0);
    const auto manhattan = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return (a - b).cwiseAbs().sum();
    };
    const auto x = set_of({{0, 0}});
    const auto y = set_of({{1, 2}});
    EXPECT_DOUBLE_EQ(ospa(x, y, params, manhattan), 3.0);
    EXPECT_DOUBLE_EQ(gospa2(x, y, params, manhattan).localisation_cost, 3.0);
}

TEST(Metrics, BruteForceEquivalenceOnSmallSets) {
    SplitMix64 rng(99);
    for (int draw = 0; draw < 150; ++draw) {
        const MetricParams params(draw % 2 == 0 ? 10.0 : 1.0, draw % 3 == 0 ? 1.0 : 2.0);
        const auto nx = rng.next() % 5;
        const auto ny = rng.next() % 5;
        const auto x = random_set(nx, 2, rng);
        const auto y = random_set(ny, 2, rng);
        EXPECT_NEAR(ospa(x, y, params), ospa_brute(x, y, params, true), 1e-12);
        EXPECT_NEAR(uospa(x, y, params), ospa_brute(x, y, params, false), 1e-12);
        const auto decomposition = gospa2(x, y, params);
        const double pth =
            std::pow(decomposition.total, params.order());
        EXPECT_NEAR(pth, gospa_brute_pth(x, y, params), 1e-10);
        EXPECT_NEAR(pth,
                    decomposition.localisation_cost + decomposition.missed_cost +
                        decomposition.false_cost,
                    1e-12 * std::max(1.0, pth));
    }
}

TEST(Metrics, FarSeparatedClosedForms) {
    // With all cross distances beyond the cutoff, only coincident points
    // match and everything else is pure cardinality cost.
    const MetricParams params(10.0, 2.0);
    const double c2 = 100.0;
    const auto x = set_of({{0}, {40}, {80}});
    const auto y = set_of({{0}, {40}, {200}, {300}});
    const double coincident = 2.0;
    const double nx = 3.0;
    const double ny = 4.0;
    const auto decomposition = gospa2(x, y, params);
    EXPECT_NEAR(decomposition.total * decomposition.total,
                0.5 * c2 * (nx + ny - 2.0 * coincident), 1e-12);
    const double o = ospa(x, y, params);
    EXPECT_NEAR(o * o, c2 * (1.0 - coincident / std::max(nx, ny)), 1e-12);
    const double u = uospa(x, y, params);
    EXPECT_NEAR(u * u, c2 * (std::max(nx, ny) - coincident), 1e-12);
}

TEST(Metrics, AxiomsOnRandomSets) {
    SplitMix64 rng(7);
    const double c_values[] = {1.0, 10.0};
    const double p_values[] = {1.0, 2.0};
    for (int draw = 0; draw < 250; ++draw) {
        const MetricParams params(c_values[draw % 2], p_values[(draw / 2) % 2]);
        const auto x = random_set(rng.next() % 6, 1 + draw % 2, rng);
        const auto y = random_set(rng.next() % 6, 1 + draw % 2, rng);
        const auto z = random_set(rng.next() % 6, 1 + draw % 2, rng);
        const double xy_o = ospa(x, y, params);
        const double xy_g = gospa2(x, y, params).total;
        EXPECT_GE(xy_o, 0.0);
        EXPECT_GE(xy_g, 0.0);
        EXPECT_LE(xy_o, params.cutoff() + 1e-12);
        EXPECT_NEAR(xy_o, ospa(y, x, params), 1e-12);
        EXPECT_NEAR(xy_g, gospa2(y, x, params).total, 1e-12);
        EXPECT_DOUBLE_EQ(ospa(x, x, params), 0.0);
        EXPECT_DOUBLE_EQ(gospa2(x, x, params).total, 0.0);
        if (x.size() != y.size()) {
            EXPECT_GT(xy_o, 0.0);
            EXPECT_GT(xy_g, 0.0);
        }
        const double slack = 1e-10 * params.cutoff();
        EXPECT_LE(ospa(x, z, params), xy_o + ospa(y, z, params) + slack);
        EXPECT_LE(gospa2(x, z, params).total, xy_g + gospa2(y, z, params).total + slack);
    }
}

TEST(Metrics, StorageOrderDoesNotAffectValues) {
    SplitMix64 rng(123);
    for (int draw = 0; draw < 50; ++draw) {
        const MetricParams params(10.0, 2.0);
        const std::size_t nx = 1 + rng.next() % 4;
        const std::size_t ny = 1 + rng.next() % 4;
        const auto x = random_set(nx, 2, rng);
        const auto y = random_set(ny, 2, rng);
        std::vector<Eigen::VectorXd> shuffled_x(x.begin(), x.end());
        std::vector<Eigen::VectorXd> shuffled_y(y.begin(), y.end());
        std::reverse(shuffled_x.begin(), shuffled_x.end());
        std::rotate(shuffled_y.begin(), shuffled_y.begin() + (ny > 1 ? 1 : 0),
                    shuffled_y.end());
        const PointSet xs(shuffled_x);
        const PointSet ys(shuffled_y);
        EXPECT_NEAR(ospa(x, y, params), ospa(xs, ys, params), 1e-12);
        EXPECT_NEAR(uospa(x, y, params), uospa(xs, ys, params), 1e-12);
        EXPECT_NEAR(gospa2(x, y, params).total, gospa2(xs, ys, params).total, 1e-12);
    }
}

TEST(PointSet, TracksDimensionAndRejectsMixes) {
    PointSet set;
    EXPECT_EQ(set.dimension(), 0);
    set.add(vec({1, 2}));
    EXPECT_EQ(set.dimension(), 2);
    EXPECT_THROW(set.add(vec({1})), DimensionMismatch);
    EXPECT_THROW(PointSet{}.add(Eigen::VectorXd(0)), std::invalid_argument);
}

TEST(MetricParams, ValidatesRanges) {
    EXPECT_THROW(MetricParams(0.0, 2.0), std::invalid_argument);
    EXPECT_THROW(MetricParams(-1.0, 2.0), std::invalid_argument);
    EXPECT_THROW(MetricParams(10.0, 0.5), std::invalid_argument);
    EXPECT_NO_THROW(MetricParams(10.0, 1.0));
}

} // namespace
