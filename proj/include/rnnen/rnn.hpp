#pragma once

#include "rnnen/activation.hpp"
#include "rnnen/signal.hpp"
#include "rnnen/types.hpp"

#include <functional>

namespace rnnen {

/// Continuous-time RNN
///
///     dh/dt = -lambda h + sigma(w h + w_tilde x(t))
///
/// with lambda diagonal (stored as its n diagonal entries, in 1/time).
struct RnnSpec {
    Index n = 0;
    Index m = 0;
    Vector lambda;
    Matrix w;
    Matrix w_tilde;
    ActivationKind activation = ActivationKind::Identity;
    Vector h0;
    InputSignal input;
};

/// An RnnSpec whose invariants were checked by validate_spec. Only
/// validate_spec can make one.
class ValidatedSpec {
public:
    [[nodiscard]] const RnnSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const RnnSpec* operator->() const noexcept { return &spec_; }
    [[nodiscard]] Index n() const noexcept { return spec_.n; }

private:
    explicit ValidatedSpec(RnnSpec spec) : spec_(std::move(spec)) {}
    friend ValidatedSpec validate_spec(RnnSpec spec);

    RnnSpec spec_;
};

/// Linearized RNN dh/dt = A h + w_tilde x(t).
///
/// `lambda` and `w` keep the split A = w - diag(lambda) that synthesis needs;
/// they may be left empty when only A matters.
struct LinearRnn {
    Matrix a;
    Vector lambda;
    Matrix w;
    Matrix w_tilde;
    Vector h0;
    InputSignal input;

    [[nodiscard]] Index n() const noexcept { return a.rows(); }
    [[nodiscard]] Index m() const noexcept { return w_tilde.cols(); }
};

/// A = w - diag(lambda).
[[nodiscard]] LinearRnn make_linear_rnn(Vector lambda, Matrix w, Matrix w_tilde, Vector h0,
                                        InputSignal input);

/// Throws NonPositiveLambda, DimensionMismatch or BadSignal naming the field.
[[nodiscard]] ValidatedSpec validate_spec(RnnSpec spec);

/// -lambda h + sigma(w h + w_tilde x(t)).
[[nodiscard]] Vector eval_rhs(const ValidatedSpec& spec, const Vector& h, Real t);
/// A h + w_tilde x(t).
[[nodiscard]] Vector eval_rhs(const LinearRnn& lin, const Vector& h, Real t);

/// Central-difference slope of `sigma` at 0 with step 1e-6; throws
/// ActivationSlopeMismatch when it differs from 1 by more than 1e-8.
void check_unit_slope(const std::function<Real(Real)>& sigma);

/// A = w - diag(lambda); w_tilde, h0 and input are copied.
[[nodiscard]] LinearRnn linearize(const ValidatedSpec& spec);

/// Classic RK4 on the uniform grid. Throws StepTooLarge if dt > min_k 1/lambda_k.
[[nodiscard]] Trajectory simulate_nonlinear(const ValidatedSpec& spec, Real t_end, Real dt);

/// Exact propagator e^{A dt} per step plus Gauss-Legendre quadrature of the
/// forcing integral. Throws StepTooLarge if dt exceeds 1/rho(A).
[[nodiscard]] Trajectory simulate_linear(const LinearRnn& lin, Real t_end, Real dt);

/// h_k(0) e^{-lambda_k t}; throws NotUncoupled unless w = 0 and the input
/// path is disconnected (w_tilde = 0 or x == 0).
[[nodiscard]] Vector free_decay(const ValidatedSpec& spec, Real t);

/// One forward-Euler step h + dt * rhs(h, t).
[[nodiscard]] Vector euler_step(const ValidatedSpec& spec, const Vector& h, Real t, Real dt);
[[nodiscard]] Vector euler_step(const LinearRnn& lin, const Vector& h, Real t, Real dt);

/// Minimum and maximum characteristic time 1/lambda_k.
[[nodiscard]] Real min_tau(const RnnSpec& spec);
[[nodiscard]] Real max_tau(const RnnSpec& spec);

}  // namespace rnnen
