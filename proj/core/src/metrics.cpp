#include "msm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace msm::metrics {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double euclidean(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return (x - y).norm();
}

const DistanceFn& resolve(const DistanceFn& dist) {
    static const DistanceFn kEuclidean = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
        return base_distance(x, y);
    };
    return dist ? dist : kEuclidean;
}

void check_dimensions(const PointSet& x, const PointSet& y) {
    if (!x.empty() && !y.empty() && x.dimension() != y.dimension()) {
        throw DimensionMismatch("point sets live in different dimensions");
    }
}

/// Min-cost matching of every row into a distinct column, rows <= cols.
/// Shortest-augmenting-path algorithm with potentials. Returns the matched
/// column per row; the cost is re-summed from the matrix by the caller so
/// that comparisons between subproblems use plain sums of entries.
std::vector<int> match_rows(const Eigen::MatrixXd& cost) {
    const int m = static_cast<int>(cost.rows());
    const int n = static_cast<int>(cost.cols());
    std::vector<double> u(static_cast<std::size_t>(m) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> row_of_col(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        row_of_col[0] = i;
        int j0 = 0;
        std::vector<double> min_reduced(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = row_of_col[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (reduced < min_reduced[j]) {
                    min_reduced[j] = reduced;
                    way[j] = j0;
                }
                if (min_reduced[j] < delta) {
                    delta = min_reduced[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[row_of_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_reduced[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of_col[j0] != 0);
        do {
            const int j1 = way[j0];
            row_of_col[j0] = row_of_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> col_of_row(static_cast<std::size_t>(m), -1);
    for (int j = 1; j <= n; ++j) {
        if (row_of_col[j] != 0) {
            col_of_row[static_cast<std::size_t>(row_of_col[j]) - 1] = j - 1;
        }
    }
    return col_of_row;
}

double matching_cost(const Eigen::MatrixXd& cost, const std::vector<int>& col_of_row) {
    double total = 0.0;
    for (std::size_t i = 0; i < col_of_row.size(); ++i) {
        total += cost(static_cast<Eigen::Index>(i), col_of_row[i]);
    }
    return total;
}

/// Min matching cost of the full smaller side; transposes internally when
/// columns are the smaller side.
double min_cost(const Eigen::MatrixXd& cost) {
    if (cost.rows() == 0 || cost.cols() == 0) return 0.0;
    if (cost.rows() <= cost.cols()) {
        return matching_cost(cost, match_rows(cost));
    }
    const Eigen::MatrixXd t = cost.transpose();
    return matching_cost(t, match_rows(t));
}

/// Min matching cost over rows in (row_from, m) and unused columns != skip_col.
double min_cost_remainder(const Eigen::MatrixXd& cost, int row_from,
                          const std::vector<char>& col_used, int skip_col) {
    const int m = static_cast<int>(cost.rows());
    const int n = static_cast<int>(cost.cols());
    std::vector<int> rows;
    for (int i = row_from + 1; i < m; ++i) rows.push_back(i);
    std::vector<int> cols;
    for (int j = 0; j < n; ++j) {
        if (!col_used[j] && j != skip_col) cols.push_back(j);
    }
    if (rows.empty() || cols.empty()) return 0.0;
    Eigen::MatrixXd sub(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
            sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                cost(rows[a], cols[b]);
        }
    }
    return min_cost(sub);
}

double pth_power(double base, double p) {
    return p == 2.0 ? base * base : std::pow(base, p);
}

/// Clipped p-th power cost matrix min(d, c)^p between two sets.
Eigen::MatrixXd clipped_cost_matrix(const PointSet& x, const PointSet& y, double cutoff,
                                    double order, const DistanceFn& dist) {
    Eigen::MatrixXd cost(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                pth_power(std::min(dist(x[i], y[j]), cutoff), order);
        }
    }
    return cost;
}

} // namespace

MetricParams::MetricParams(double cutoff, double order) : cutoff_(cutoff), order_(order) {
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
        throw std::invalid_argument("MetricParams: cutoff must be positive and finite");
    }
    if (!(order >= 1.0) || !std::isfinite(order)) {
        throw std::invalid_argument("MetricParams: order must satisfy 1 <= p < inf");
    }
}

PointSet::PointSet(std::vector<Eigen::VectorXd> points) {
    for (auto& p : points) {
        add(std::move(p));
    }
}

void PointSet::add(Eigen::VectorXd point) {
    if (point.size() == 0) {
        throw std::invalid_argument("PointSet: states must have dimension >= 1");
    }
    if (!points_.empty() && point.size() != points_.front().size()) {
        throw DimensionMismatch("PointSet: mixed state dimensions");
    }
    points_.push_back(std::move(point));
}

Eigen::Index PointSet::dimension() const noexcept {
    return points_.empty() ? 0 : points_.front().size();
}

double base_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) {
        throw DimensionMismatch("base_distance: vectors differ in dimension");
    }
    return euclidean(x, y);
}

Assignment solve_assignment(const Eigen::MatrixXd& cost_matrix) {
    if (!cost_matrix.allFinite()) {
        throw std::invalid_argument("solve_assignment: cost matrix must be finite");
    }
    const int m = static_cast<int>(cost_matrix.rows());
    const int n = static_cast<int>(cost_matrix.cols());
    const int k = std::min(m, n);
    Assignment result;
    if (k == 0) return result;

    // Per-step slack when deciding whether a candidate pair still reaches the
    // minimum: generous enough for summation-order noise, far below any real
    // cost gap.
    const double scale = std::max(1.0, cost_matrix.cwiseAbs().maxCoeff() * k);
    const double tol = 1e-12 * scale;

    // Builds the sorted pair list greedily: at each step pick the
    // lexicographically smallest pair that a min-cost completion can extend.
    // All later pairs must use strictly larger row indices, so feasibility of
    // a candidate (i, j) is one matching solve on rows > i.
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);
    int min_row = 0;
    result.pairs.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        const int remaining = k - t - 1; // pairs still to place after this one
        struct Candidate {
            int i, j;
            double value;
        };
        std::vector<Candidate> candidates;
        for (int i = min_row; i < m; ++i) {
            if (m - i - 1 < remaining) break; // not enough rows left below i
            for (int j = 0; j < n; ++j) {
                if (col_used[j]) continue;
                const double value =
                    cost_matrix(i, j) + min_cost_remainder(cost_matrix, i, col_used, j);
                candidates.push_back({i, j, value});
            }
            if (m <= n) break; // every row is matched, no skipping allowed
        }
        double step_min = kInf;
        for (const auto& c : candidates) step_min = std::min(step_min, c.value);
        const Candidate* chosen = nullptr;
        for (const auto& c : candidates) {
            if (c.value <= step_min + tol) {
                chosen = &c;
                break;
            }
        }
        result.pairs.emplace_back(chosen->i, chosen->j);
        result.cost += cost_matrix(chosen->i, chosen->j);
        col_used[chosen->j] = 1;
        min_row = chosen->i + 1;
    }
    return result;
}

double ospa(const PointSet& x, const PointSet& y, const MetricParams& params,
            const DistanceFn& dist) {
    check_dimensions(x, y);
    const PointSet& small = x.size() <= y.size() ? x : y;
    const PointSet& large = x.size() <= y.size() ? y : x;
    if (large.empty()) return 0.0;
    const double c = params.cutoff();
    const double p = params.order();
    const double matched =
        min_cost(clipped_cost_matrix(small, large, c, p, resolve(dist)));
    const double card_penalty =
        pth_power(c, p) * static_cast<double>(large.size() - small.size());
    return std::pow((matched + card_penalty) / static_cast<double>(large.size()), 1.0 / p);
}

double uospa(const PointSet& x, const PointSet& y, const MetricParams& params,
             const DistanceFn& dist) {
    check_dimensions(x, y);
    const PointSet& small = x.size() <= y.size() ? x : y;
    const PointSet& large = x.size() <= y.size() ? y : x;
    if (large.empty()) return 0.0;
    const double c = params.cutoff();
    const double p = params.order();
    const double matched =
        min_cost(clipped_cost_matrix(small, large, c, p, resolve(dist)));
    const double card_penalty =
        pth_power(c, p) * static_cast<double>(large.size() - small.size());
    return std::pow(matched + card_penalty, 1.0 / p);
}

GospaDecomposition gospa2(const PointSet& x, const PointSet& y, const MetricParams& params,
                          const DistanceFn& dist) {
    check_dimensions(x, y);
    const double c = params.cutoff();
    const double p = params.order();
    const DistanceFn& d = resolve(dist);
    GospaDecomposition out;

    // Assigning a pair at distance >= c costs the same as declaring one miss
    // plus one false target, so a full matching of the smaller side under
    // clipped costs attains the optimum; dropped cutoff pairs then land in
    // the cardinality terms.
    std::size_t assigned = 0;
    if (!x.empty() && !y.empty()) {
        const bool x_small = x.size() <= y.size();
        const PointSet& small = x_small ? x : y;
        const PointSet& large = x_small ? y : x;
        const Assignment match =
            solve_assignment(clipped_cost_matrix(small, large, c, p, d));
        for (const auto& [i, j] : match.pairs) {
            const double dij = d(small[static_cast<std::size_t>(i)],
                                 large[static_cast<std::size_t>(j)]);
            if (dij < c) {
                out.localisation_cost += pth_power(dij, p);
                ++assigned;
            }
        }
    }
    const double half_cp = 0.5 * pth_power(c, p);
    out.missed_cost = half_cp * static_cast<double>(x.size() - assigned);
    out.false_cost = half_cp * static_cast<double>(y.size() - assigned);
    out.total = std::pow(out.localisation_cost + out.missed_cost + out.false_cost, 1.0 / p);
    return out;
}

} // namespace msm::metrics
