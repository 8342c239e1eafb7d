#include "rnnen/rnn.hpp"

#include "rnnen/error.hpp"
#include "rnnen/propagator.hpp"

#include <cmath>
#include <string>

namespace rnnen {

namespace {

std::string indexed(const char* field, Index i) {
    return std::string(field) + "[" + std::to_string(i) + "]";
}

void require_shape(const Matrix& mat, Index rows, Index cols, const char* field) {
    if (mat.rows() != rows || mat.cols() != cols) {
        throw Error(Errc::DimensionMismatch, field,
                    "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                        std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
    }
}

void require_finite(const Matrix& mat, const char* field) {
    for (Index i = 0; i < mat.rows(); ++i) {
        for (Index j = 0; j < mat.cols(); ++j) {
            if (!std::isfinite(mat(i, j))) {
                throw Error(Errc::DimensionMismatch, std::string(field) + "[" + std::to_string(i) +
                                                         "][" + std::to_string(j) + "]",
                            "non-finite entry");
            }
        }
    }
}

void require_step(Real dt, Real limit) {
    if (dt > limit) {
        throw Error(Errc::StepTooLarge, "dt",
                    "step " + std::to_string(dt) + " exceeds the stability limit " + std::to_string(limit));
    }
}

Vector drive(const InputSignal& input, const Matrix& w_tilde, Real t) {
    if (input.is_zero() || w_tilde.cols() == 0) return Vector::Zero(w_tilde.rows());
    return w_tilde * input(t);
}

}  // namespace

ValidatedSpec validate_spec(RnnSpec spec) {
    if (spec.n < 1) {
        throw Error(Errc::DimensionMismatch, "n", "neuron count must be at least 1");
    }
    if (spec.m < 0) {
        throw Error(Errc::DimensionMismatch, "m", "input count must be non-negative");
    }
    if (spec.lambda.size() != spec.n) {
        throw Error(Errc::DimensionMismatch, "lambda",
                    "expected " + std::to_string(spec.n) + " entries, got " + std::to_string(spec.lambda.size()));
    }
    for (Index k = 0; k < spec.n; ++k) {
        if (!(spec.lambda[k] > 0.0) || !std::isfinite(spec.lambda[k])) {
            throw Error(Errc::NonPositiveLambda, indexed("lambda", k), "decay rates must be positive and finite");
        }
    }
    require_shape(spec.w, spec.n, spec.n, "w");
    require_finite(spec.w, "w");
    require_shape(spec.w_tilde, spec.n, spec.m, "w_tilde");
    require_finite(spec.w_tilde, "w_tilde");
    if (spec.h0.size() != spec.n) {
        throw Error(Errc::DimensionMismatch, "h0",
                    "expected " + std::to_string(spec.n) + " entries, got " + std::to_string(spec.h0.size()));
    }
    require_finite(spec.h0, "h0");
    if (spec.input.dimension() != spec.m) {
        throw Error(Errc::BadSignal, "input",
                    "signal has " + std::to_string(spec.input.dimension()) + " components, expected " +
                        std::to_string(spec.m));
    }
    return ValidatedSpec(std::move(spec));
}

Vector eval_rhs(const ValidatedSpec& spec, const Vector& h, Real t) {
    const RnnSpec& s = spec.spec();
    Vector pre = s.w * h;
    pre += drive(s.input, s.w_tilde, t);
    return activate(s.activation, pre) - s.lambda.cwiseProduct(h);
}

Vector eval_rhs(const LinearRnn& lin, const Vector& h, Real t) {
    Vector out = lin.a * h;
    out += drive(lin.input, lin.w_tilde, t);
    return out;
}

void check_unit_slope(const std::function<Real(Real)>& sigma) {
    constexpr Real step = 1e-6;
    const Real slope = (sigma(step) - sigma(-step)) / (2.0 * step);
    if (!(std::abs(slope - 1.0) <= 1e-8)) {
        throw Error(Errc::ActivationSlopeMismatch, "activation",
                    "slope at the origin is " + std::to_string(slope) + ", expected 1");
    }
}

LinearRnn linearize(const ValidatedSpec& spec) {
    const RnnSpec& s = spec.spec();
    check_unit_slope([kind = s.activation](Real xi) { return activate(kind, xi); });
    return make_linear_rnn(s.lambda, s.w, s.w_tilde, s.h0, s.input);
}

LinearRnn make_linear_rnn(Vector lambda, Matrix w, Matrix w_tilde, Vector h0, InputSignal input) {
    LinearRnn lin;
    lin.a = w;
    lin.a.diagonal() -= lambda;
    lin.lambda = std::move(lambda);
    lin.w = std::move(w);
    lin.w_tilde = std::move(w_tilde);
    lin.h0 = std::move(h0);
    lin.input = std::move(input);
    return lin;
}

Real min_tau(const RnnSpec& spec) { return 1.0 / spec.lambda.maxCoeff(); }
Real max_tau(const RnnSpec& spec) { return 1.0 / spec.lambda.minCoeff(); }

Trajectory simulate_nonlinear(const ValidatedSpec& spec, Real t_end, Real dt) {
    const TimeGrid grid(t_end, dt);
    require_step(dt, min_tau(spec.spec()));

    Trajectory traj;
    traj.times = grid.times();
    traj.labels = indexed_labels("h", spec.n());
    traj.states.resize(static_cast<Index>(grid.size()), spec.n());

    Vector h = spec->h0;
    traj.states.row(0) = h.transpose();
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        const Real t = grid.time(i);
        const Real step = grid.step(i);
        const Vector k1 = eval_rhs(spec, h, t);
        const Vector k2 = eval_rhs(spec, h + 0.5 * step * k1, t + 0.5 * step);
        const Vector k3 = eval_rhs(spec, h + 0.5 * step * k2, t + 0.5 * step);
        const Vector k4 = eval_rhs(spec, h + step * k3, t + step);
        h += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.states.row(static_cast<Index>(i + 1)) = h.transpose();
    }
    return traj;
}

Trajectory simulate_linear(const LinearRnn& lin, Real t_end, Real dt) {
    const TimeGrid grid(t_end, dt);
    const Real rho = spectral_radius(lin.a);
    if (rho > 0.0) require_step(dt, 1.0 / rho);
    const LtiPropagator propagator(lin.a, lin.w_tilde, lin.input);
    return propagator.run(lin.h0, grid, indexed_labels("h", lin.n()));
}

Vector free_decay(const ValidatedSpec& spec, Real t) {
    const RnnSpec& s = spec.spec();
    if (!s.w.isZero(0.0)) {
        throw Error(Errc::NotUncoupled, "w", "recurrent weights are not zero");
    }
    if (!s.w_tilde.isZero(0.0) && !s.input.is_zero()) {
        throw Error(Errc::NotUncoupled, "w_tilde", "external drive is connected");
    }
    Vector out(s.n);
    for (Index k = 0; k < s.n; ++k) out[k] = s.h0[k] * std::exp(-s.lambda[k] * t);
    return out;
}

Vector euler_step(const ValidatedSpec& spec, const Vector& h, Real t, Real dt) {
    return h + dt * eval_rhs(spec, h, t);
}

Vector euler_step(const LinearRnn& lin, const Vector& h, Real t, Real dt) {
    return h + dt * eval_rhs(lin, h, t);
}

}  // namespace rnnen
