#pragma once

#include "rnnen/types.hpp"

#include <vector>

namespace rnnen {

enum class SignalKind { Zero, Constant, Step, Sinusoid, PiecewiseLinear };

/// External excitation x(t) with m components.
///
///   zero              x(t) = 0
///   constant          x(t) = a
///   step              x(t) = a for t >= onset, 0 before
///   sinusoid          x(t) = a * sin(omega t + phase)
///   piecewise-linear  linear interpolation of the sample table, held
///                     constant outside the sampled range
///
/// Construct through the factories; they validate and throw Errc::BadSignal.
class InputSignal {
public:
    InputSignal() = default;

    static InputSignal zero(Index m);
    /// An all-zero amplitude collapses to the zero kind.
    static InputSignal constant(Vector amplitude);
    static InputSignal step(Vector amplitude, Real onset);
    static InputSignal sinusoid(Vector amplitude, Real omega, Real phase);
    /// `values` holds one m-vector per sample time; times strictly increasing.
    static InputSignal piecewise_linear(std::vector<Real> times, std::vector<Vector> values);

    [[nodiscard]] SignalKind kind() const noexcept { return kind_; }
    [[nodiscard]] Index dimension() const noexcept { return m_; }
    [[nodiscard]] bool is_zero() const noexcept { return kind_ == SignalKind::Zero; }

    [[nodiscard]] Vector operator()(Real t) const;
    [[nodiscard]] Real component(Index l, Real t) const;

    /// Times in the open interval (a, b) where x(t) or its slope jumps.
    [[nodiscard]] std::vector<Real> breakpoints(Real a, Real b) const;

    [[nodiscard]] const Vector& amplitude() const noexcept { return amplitude_; }
    [[nodiscard]] Real onset() const noexcept { return onset_; }
    [[nodiscard]] Real omega() const noexcept { return omega_; }
    [[nodiscard]] Real phase() const noexcept { return phase_; }
    [[nodiscard]] const std::vector<Real>& sample_times() const noexcept { return times_; }
    [[nodiscard]] const std::vector<Vector>& sample_values() const noexcept { return values_; }

    friend bool operator==(const InputSignal& a, const InputSignal& b);

private:
    SignalKind kind_ = SignalKind::Zero;
    Index m_ = 0;
    Vector amplitude_;
    Real onset_ = 0.0;
    Real omega_ = 0.0;
    Real phase_ = 0.0;
    std::vector<Real> times_;
    std::vector<Vector> values_;
};

[[nodiscard]] const char* signal_kind_name(SignalKind kind) noexcept;

}  // namespace rnnen
