#pragma once

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msm::metrics {

/// Thrown when two states (or two sets) do not live in the same space.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cutoff c and order p shared by the OSPA, UOSPA and GOSPA metrics.
/// Requires c > 0 and 1 <= p < inf.
class MetricParams {
public:
    MetricParams(double cutoff, double order);

    [[nodiscard]] double cutoff() const noexcept { return cutoff_; }
    [[nodiscard]] double order() const noexcept { return order_; }

private:
    double cutoff_;
    double order_;
};

/// A finite set of single-target states in R^nx. Storage order never affects
/// metric values; it only fixes the row order of cost matrices.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Eigen::VectorXd> points);

    /// Appends a point; throws DimensionMismatch if it disagrees with the
    /// dimension already established by earlier points.
    void add(Eigen::VectorXd point);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }

    /// Dimension of the member states; 0 for the empty set.
    [[nodiscard]] Eigen::Index dimension() const noexcept;

    [[nodiscard]] const Eigen::VectorXd& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] auto begin() const noexcept { return points_.begin(); }
    [[nodiscard]] auto end() const noexcept { return points_.end(); }

private:
    std::vector<Eigen::VectorXd> points_;
};

/// Base distance on the single-target space. Any metric works; Euclidean is
/// the default used throughout when none is supplied.
using DistanceFn = std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

/// Euclidean distance. Throws DimensionMismatch if the vectors differ in size.
[[nodiscard]] double base_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// A partial matching between row indices and column indices: every index
/// appears at most once on each side. `pairs` is sorted ascending.
struct Assignment {
    std::vector<std::pair<int, int>> pairs;
    double cost = 0.0;
};

/// Minimum-cost matching that covers every row if rows <= cols, otherwise
/// every column. Deterministic under ties: among all minimum-cost matchings
/// the lexicographically smallest sorted pair list is returned.
/// Throws std::invalid_argument on non-finite entries.
[[nodiscard]] Assignment solve_assignment(const Eigen::MatrixXd& cost_matrix);

/// OSPA distance. Always in [0, c]; 0 for two empty sets.
[[nodiscard]] double ospa(const PointSet& x, const PointSet& y, const MetricParams& params,
                          const DistanceFn& dist = {});

/// Unnormalised OSPA: the OSPA expression without the division by the larger
/// cardinality. uospa(empty, Y) = c * |Y|^(1/p).
[[nodiscard]] double uospa(const PointSet& x, const PointSet& y, const MetricParams& params,
                           const DistanceFn& dist = {});

/// GOSPA (alpha = 2) split into its three cost terms, all in p-th power
/// units: total^p = localisation_cost + missed_cost + false_cost.
struct GospaDecomposition {
    double localisation_cost = 0.0;
    double missed_cost = 0.0;
    double false_cost = 0.0;
    double total = 0.0;
};

/// GOSPA (alpha = 2) distance with its localisation / missed-target /
/// false-target decomposition. Assigned pairs at base distance >= c are
/// counted as one missed plus one false target, which costs the same as
/// keeping the assignment and makes the decomposition deterministic.
[[nodiscard]] GospaDecomposition gospa2(const PointSet& x, const PointSet& y,
                                        const MetricParams& params, const DistanceFn& dist = {});

} // namespace msm::metrics
