#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace rnnen {

using Real = double;
using Complex = std::complex<double>;
using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Uniform sampling grid on [0, t_end]. Interior points sit at i*dt; the last
/// point is exactly t_end, so the final step may be shorter than dt.
class TimeGrid {
public:
    TimeGrid(Real t_end, Real dt);

    [[nodiscard]] Real t_end() const noexcept { return t_end_; }
    [[nodiscard]] Real dt() const noexcept { return dt_; }
    [[nodiscard]] std::size_t steps() const noexcept { return steps_; }
    [[nodiscard]] std::size_t size() const noexcept { return steps_ + 1; }
    [[nodiscard]] Real time(std::size_t i) const noexcept;
    /// Length of step i, i.e. time(i+1) - time(i) with interior steps pinned to dt.
    [[nodiscard]] Real step(std::size_t i) const noexcept;
    [[nodiscard]] Real last_step() const noexcept { return last_step_; }
    [[nodiscard]] std::vector<Real> times() const;

private:
    Real t_end_;
    Real dt_;
    std::size_t steps_;
    Real last_step_;
};

/// Sampled trajectory shared by every simulator. Row i of `states` is the
/// state at `times[i]`.
struct Trajectory {
    std::vector<Real> times;
    Matrix states;
    std::vector<std::string> labels;

    [[nodiscard]] std::size_t samples() const noexcept { return times.size(); }
    [[nodiscard]] Index dimension() const noexcept { return states.cols(); }
    [[nodiscard]] Vector state(std::size_t i) const { return states.row(static_cast<Index>(i)).transpose(); }
};

/// Labels of the form prefix_1 ... prefix_n.
[[nodiscard]] std::vector<std::string> indexed_labels(const std::string& prefix, Index n);

/// Sup over samples of the max-norm difference. Both trajectories must share
/// the grid and dimension.
[[nodiscard]] Real sup_distance(const Trajectory& a, const Trajectory& b);

}  // namespace rnnen
