#include "rnnen/propagator.hpp"

#include "rnnen/error.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>

namespace rnnen {

namespace {

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<Real, 5> kNodes = {
    -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
    0.5384693101056830910363144, 0.9061798459386639927976269};
constexpr std::array<Real, 5> kWeights = {
    0.2369268850561890875142640, 0.4786286704993664680412915, 0.5688888888888888888888889,
    0.4786286704993664680412915, 0.2369268850561890875142640};

Matrix expm(const Matrix& m) { return m.exp(); }

}  // namespace

LtiPropagator::LtiPropagator(Matrix a, Matrix b, InputSignal input)
    : a_(std::move(a)), b_(std::move(b)), input_(std::move(input)) {
    if (a_.rows() != a_.cols()) {
        throw Error(Errc::DimensionMismatch, "A", "state matrix must be square");
    }
    if (b_.rows() != a_.rows()) {
        throw Error(Errc::DimensionMismatch, "B", "input matrix row count differs from state size");
    }
    if (!input_.is_zero() && input_.dimension() != b_.cols()) {
        throw Error(Errc::DimensionMismatch, "input", "signal width differs from input matrix columns");
    }
}

LtiPropagator::StepCache LtiPropagator::make_cache(Real h) const {
    StepCache cache;
    cache.h = h;
    cache.phi = expm(a_ * h);
    if (!input_.is_zero() && b_.cols() > 0) {
        cache.weighted_kernels.reserve(kNodes.size());
        for (std::size_t q = 0; q < kNodes.size(); ++q) {
            const Real s = 0.5 * h * (1.0 + kNodes[q]);
            cache.weighted_kernels.push_back((0.5 * h * kWeights[q]) * (expm(a_ * (h - s)) * b_));
        }
    }
    return cache;
}

Vector LtiPropagator::forcing_on(Real t0, Real h, Real a, Real b) const {
    Vector acc = Vector::Zero(a_.rows());
    const Real half = 0.5 * (b - a);
    const Real mid = 0.5 * (a + b);
    for (std::size_t q = 0; q < kNodes.size(); ++q) {
        const Real s = mid + half * kNodes[q];
        acc += (half * kWeights[q]) * (expm(a_ * (h - s)) * (b_ * input_(t0 + s)));
    }
    return acc;
}

Vector LtiPropagator::forcing(Real t0, Real h, const StepCache& cache) const {
    const auto cuts = input_.breakpoints(t0, t0 + h);
    if (cuts.empty()) {
        Vector acc = Vector::Zero(a_.rows());
        for (std::size_t q = 0; q < kNodes.size(); ++q) {
            const Real s = 0.5 * h * (1.0 + kNodes[q]);
            acc += cache.weighted_kernels[q] * input_(t0 + s);
        }
        return acc;
    }
    Vector acc = Vector::Zero(a_.rows());
    Real lo = 0.0;
    for (Real cut : cuts) {
        acc += forcing_on(t0, h, lo, cut - t0);
        lo = cut - t0;
    }
    acc += forcing_on(t0, h, lo, h);
    return acc;
}

Trajectory LtiPropagator::run(const Vector& x0, const TimeGrid& grid,
                              std::vector<std::string> labels) const {
    const Index n = a_.rows();
    if (x0.size() != n) {
        throw Error(Errc::DimensionMismatch, "x0", "initial state size differs from state matrix");
    }
    Trajectory traj;
    traj.times = grid.times();
    traj.labels = std::move(labels);
    traj.states.resize(static_cast<Index>(grid.size()), n);
    traj.states.row(0) = x0.transpose();

    const bool forced = !input_.is_zero() && b_.cols() > 0;
    const StepCache regular = make_cache(grid.dt());
    StepCache last;
    const bool short_last = grid.last_step() != grid.dt();
    if (short_last) last = make_cache(grid.last_step());

    Vector x = x0;
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        const StepCache& cache = (short_last && i + 1 == grid.steps()) ? last : regular;
        Vector next = cache.phi * x;
        if (forced) next += forcing(grid.time(i), cache.h, cache);
        x = std::move(next);
        traj.states.row(static_cast<Index>(i + 1)) = x.transpose();
    }
    return traj;
}

Real spectral_radius(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::EigenSolver<Matrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw Error(Errc::EigenSolverFailure, "A", "eigenvalue iteration did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace rnnen
