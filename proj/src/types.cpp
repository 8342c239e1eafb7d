#include "rnnen/types.hpp"

#include "rnnen/error.hpp"

#include <cmath>
#include <string>

namespace rnnen {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NonPositiveLambda: return "NonPositiveLambda";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadSignal: return "BadSignal";
    case Errc::ActivationSlopeMismatch: return "ActivationSlopeMismatch";
    case Errc::StepTooLarge: return "StepTooLarge";
    case Errc::NotUncoupled: return "NotUncoupled";
    case Errc::PoleEvaluation: return "PoleEvaluation";
    case Errc::SingularResolvent: return "SingularResolvent";
    case Errc::EigenSolverFailure: return "EigenSolverFailure";
    case Errc::NonPositiveCapacitance: return "NonPositiveCapacitance";
    case Errc::NonPositiveInductance: return "NonPositiveInductance";
    case Errc::InconsistentNetwork: return "InconsistentNetwork";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DanglingNode: return "DanglingNode";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    }
    return "Error";
}

TimeGrid::TimeGrid(Real t_end, Real dt) : t_end_(t_end), dt_(dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(Errc::InvalidArgument, "dt", "time step must be positive and finite");
    }
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw Error(Errc::InvalidArgument, "t_end", "end time must be positive and finite");
    }
    if (dt > t_end) {
        throw Error(Errc::InvalidArgument, "dt", "time step exceeds the end time");
    }
    // Ratios within 1e-9 of an integer are treated as exact multiples.
    const Real ratio = t_end / dt;
    const Real nearest = std::round(ratio);
    const Real count = std::abs(ratio - nearest) <= 1e-9 * nearest ? nearest : std::ceil(ratio);
    steps_ = static_cast<std::size_t>(count);
    last_step_ = t_end_ - static_cast<Real>(steps_ - 1) * dt_;
}

Real TimeGrid::time(std::size_t i) const noexcept {
    return i >= steps_ ? t_end_ : static_cast<Real>(i) * dt_;
}

Real TimeGrid::step(std::size_t i) const noexcept {
    return i + 1 >= steps_ ? last_step_ : dt_;
}

std::vector<Real> TimeGrid::times() const {
    std::vector<Real> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = time(i);
    return out;
}

std::vector<std::string> indexed_labels(const std::string& prefix, Index n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index k = 1; k <= n; ++k) out.push_back(prefix + "_" + std::to_string(k));
    return out;
}

Real sup_distance(const Trajectory& a, const Trajectory& b) {
    if (a.times.size() != b.times.size() || a.states.rows() != b.states.rows() ||
        a.states.cols() != b.states.cols()) {
        throw Error(Errc::DimensionMismatch, "trajectory", "trajectories do not share a grid");
    }
    if (a.states.size() == 0) return 0.0;
    return (a.states - b.states).cwiseAbs().maxCoeff();
}

}  // namespace rnnen
