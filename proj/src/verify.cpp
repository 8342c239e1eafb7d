#include "rnnen/verify.hpp"

#include "rnnen/circuit_sim.hpp"
#include "rnnen/error.hpp"
#include "rnnen/network.hpp"

#include <algorithm>
#include <cmath>

namespace rnnen {

namespace {

VerificationReport norm_report(std::string check, Real metric, Real tolerance) {
    VerificationReport report;
    report.check = std::move(check);
    report.metric = metric;
    report.tolerance = tolerance;
    report.comparison = "<=";
    report.pass = metric <= tolerance;
    return report;
}

}  // namespace

VerificationReport verify_equivalence(const ValidatedSpec& spec, const Vector& c, Real t_end, Real dt) {
    const LinearRnn lin = linearize(spec);
    const Trajectory rnn = simulate_linear(lin, t_end, dt);
    const Trajectory en = simulate_en(synthesize_parallel(lin, c), t_end, dt);
    VerificationReport report = norm_report("equivalence", sup_distance(rnn, en), kEquivalenceTolerance);
    report.scalars["t_end"] = t_end;
    report.scalars["dt"] = dt;
    report.scalars["samples"] = static_cast<Real>(rnn.samples());
    return report;
}

VerificationReport verify_duality(const ValidatedSpec& spec, const Vector& c, const Vector& l, Real t_end,
                                  Real dt) {
    const LinearRnn lin = linearize(spec);
    const Trajectory parallel = simulate_en(synthesize_parallel(lin, c), t_end, dt);
    const Trajectory series = simulate_en(synthesize_series(lin, l), t_end, dt);
    VerificationReport report = norm_report("duality", sup_distance(parallel, series), kDualityTolerance);
    report.scalars["t_end"] = t_end;
    report.scalars["dt"] = dt;
    return report;
}

Real fitted_slope(const std::vector<Real>& x, const std::vector<Real>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(Errc::InvalidArgument, "fit", "need at least two paired samples");
    }
    const Real count = static_cast<Real>(x.size());
    Real mx = 0.0;
    Real my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    Real sxy = 0.0;
    Real sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw Error(Errc::DegenerateFit, "fit", "abscissae coincide");
    return sxy / sxx;
}

VerificationReport verify_linearization_order(const ValidatedSpec& spec, const std::vector<Real>& amplitudes,
                                              Real t_end, Real dt) {
    if (amplitudes.size() < 2) {
        throw Error(Errc::InvalidArgument, "amplitudes", "need at least two amplitudes");
    }
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (!(amplitudes[i] > 0.0) || (i > 0 && !(amplitudes[i] < amplitudes[i - 1]))) {
            throw Error(Errc::InvalidArgument, "amplitudes[" + std::to_string(i) + "]",
                        "amplitudes must be positive and strictly decreasing");
        }
    }
    if (!spec->input.is_zero() && !spec->w_tilde.isZero(0.0)) {
        throw Error(Errc::InvalidArgument, "input", "linearization order is measured for the unforced system");
    }

    std::vector<Real> errors;
    for (Real a : amplitudes) {
        RnnSpec scaled = spec.spec();
        scaled.h0 *= a;
        // Both paths share the integrator so its truncation error cancels and
        // E(a) isolates the activation remainder.
        RnnSpec linear_spec = scaled;
        linear_spec.activation = ActivationKind::Identity;
        const Trajectory nonlinear = simulate_nonlinear(validate_spec(std::move(scaled)), t_end, dt);
        const Trajectory linear = simulate_nonlinear(validate_spec(std::move(linear_spec)), t_end, dt);
        errors.push_back(sup_distance(nonlinear, linear));
    }

    VerificationReport report;
    report.check = "linearization";
    report.series["amplitudes"] = amplitudes;
    report.series["errors"] = errors;
    report.scalars["t_end"] = t_end;
    report.scalars["dt"] = dt;

    const Real worst = *std::max_element(errors.begin(), errors.end());
    if (spec->activation == ActivationKind::Identity) {
        report.metric = worst;
        report.tolerance = kExactLinearBound;
        report.comparison = "<=";
        report.pass = worst <= kExactLinearBound;
        report.note = "exact-linear: identity activation, no remainder to fit";
        return report;
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i] < kNoiseFloor) {
            throw Error(Errc::DegenerateFit, "errors[" + std::to_string(i) + "]",
                        "linearization error below the noise floor");
        }
    }
    std::vector<Real> log_a;
    std::vector<Real> log_e;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        log_a.push_back(std::log(amplitudes[i]));
        log_e.push_back(std::log(errors[i]));
    }
    report.metric = fitted_slope(log_a, log_e);
    report.tolerance = kMinimumLinearizationOrder;
    report.comparison = ">=";
    report.pass = report.metric >= kMinimumLinearizationOrder;
    report.note = "fitted order of log error against log amplitude";
    return report;
}

Matrix euler_jacobian_at_origin(const ValidatedSpec& spec, Real dt) {
    const RnnSpec& s = spec.spec();
    const Real slope = activate_derivative(s.activation, 0.0);
    Matrix jac = Matrix::Identity(s.n, s.n);
    jac += (dt * slope) * s.w;
    jac.diagonal() -= dt * s.lambda;
    return jac;
}

Matrix linear_euler_map(const LinearRnn& lin, Real dt) {
    return Matrix::Identity(lin.n(), lin.n()) + dt * lin.a;
}

VerificationReport verify_commutation(const ValidatedSpec& spec, Real dt) {
    if (!(dt >= 0.0) || !std::isfinite(dt)) {
        throw Error(Errc::InvalidArgument, "dt", "step must be non-negative and finite");
    }
    const Matrix discretized_first = euler_jacobian_at_origin(spec, dt);
    const Matrix linearized_first = linear_euler_map(linearize(spec), dt);
    const Real metric = (discretized_first - linearized_first).cwiseAbs().maxCoeff();
    VerificationReport report = norm_report("commutation", metric, kCommutationTolerance);
    report.scalars["dt"] = dt;
    return report;
}

VerificationReport verify_scale_invariance(const ValidatedSpec& spec, const Vector& c1, const Vector& c2,
                                           Real t_end, Real dt) {
    const LinearRnn lin = linearize(spec);
    const ParallelRcNetwork first = synthesize_parallel(lin, c1);
    const ParallelRcNetwork second = synthesize_parallel(lin, c2);
    const Trajectory a = simulate_en(first, t_end, dt);
    const Trajectory b = simulate_en(second, t_end, dt);
    VerificationReport report = norm_report("scale-invariance", sup_distance(a, b), kScaleInvarianceTolerance);
    const NetworkDynamics da = dynamics(first);
    const NetworkDynamics db = dynamics(second);
    report.scalars["lambda_difference"] = (da.lambda - db.lambda).cwiseAbs().maxCoeff();
    report.scalars["omega_difference"] = (da.omega - db.omega).cwiseAbs().maxCoeff();
    report.scalars["t_end"] = t_end;
    report.scalars["dt"] = dt;
    return report;
}

}  // namespace rnnen
