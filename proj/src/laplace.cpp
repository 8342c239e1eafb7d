#include "rnnen/laplace.hpp"

#include "rnnen/error.hpp"
#include "rnnen/network.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace rnnen {

RationalEval decay_transfer_eval(Real lambda_k, Real h_k0, Complex s) {
    return {Complex(h_k0, 0.0), s + lambda_k};
}

Complex decay_transfer(Real lambda_k, Real h_k0, Complex s) {
    const RationalEval r = decay_transfer_eval(lambda_k, h_k0, s);
    if (r.denominator == Complex(0.0, 0.0)) {
        throw Error(Errc::PoleEvaluation, "s", "evaluation at the pole s = -lambda");
    }
    return r.value();
}

ComplexVector resolvent_apply(const Matrix& a, const Matrix& b, Complex s, const ComplexVector& v0,
                              const ComplexVector& u) {
    const Index n = a.rows();
    if (v0.size() != n) {
        throw Error(Errc::DimensionMismatch, "v0", "initial vector size differs from system order");
    }
    if (u.size() != b.cols()) {
        throw Error(Errc::DimensionMismatch, "U", "input vector size differs from input matrix");
    }
    ComplexMatrix m = -a.cast<Complex>();
    m.diagonal().array() += s;
    ComplexVector rhs = v0;
    if (b.cols() > 0) rhs += b.cast<Complex>() * u;

    const Eigen::FullPivLU<ComplexMatrix> lu(m);
    // Relative pivot threshold; a pole makes the smallest pivot vanish.
    const Real scale = std::max<Real>(1.0, m.cwiseAbs().maxCoeff());
    if (n > 0 && std::abs(lu.matrixLU()(n - 1, n - 1)) <= 64.0 * 2.2e-16 * scale) {
        throw Error(Errc::SingularResolvent, "s", "s coincides with a pole of the resolvent");
    }
    return lu.solve(rhs);
}

ComplexVector system_transfer_apply(const LinearRnn& lin, Complex s, const ComplexVector& v0,
                                    const ComplexVector& u) {
    return resolvent_apply(lin.a, lin.w_tilde, s, v0, u);
}

ComplexVector system_transfer_apply(const ParallelRcNetwork& net, Complex s, const ComplexVector& v0,
                                    const ComplexVector& u) {
    const NetworkDynamics dyn = dynamics(net);
    Matrix a = dyn.omega;
    a.diagonal() -= dyn.lambda;
    return resolvent_apply(a, dyn.omega_tilde, s, v0, u);
}

StabilityReport analyze_stability(const Matrix& a) {
    StabilityReport report;
    if (a.size() == 0) return report;
    Eigen::EigenSolver<Matrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw Error(Errc::EigenSolverFailure, "A", "eigenvalue iteration did not converge");
    }
    const auto& eig = solver.eigenvalues();
    report.eigenvalues.assign(eig.data(), eig.data() + eig.size());
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    report.spectral_abscissa = report.eigenvalues.front().real();
    for (const Complex& z : report.eigenvalues) {
        report.spectral_abscissa = std::max(report.spectral_abscissa, z.real());
    }
    if (std::abs(report.spectral_abscissa) <= kMarginalBand) {
        report.verdict = StabilityVerdict::Marginal;
    } else if (report.spectral_abscissa < 0.0) {
        report.verdict = StabilityVerdict::AsymptoticallyStable;
    } else {
        report.verdict = StabilityVerdict::Unstable;
    }
    return report;
}

StabilityReport poles_and_stability(const LinearRnn& lin) { return analyze_stability(lin.a); }

const char* verdict_name(StabilityVerdict verdict) noexcept {
    switch (verdict) {
    case StabilityVerdict::AsymptoticallyStable: return "asymptotically-stable";
    case StabilityVerdict::Marginal: return "marginal";
    case StabilityVerdict::Unstable: return "unstable";
    }
    return "marginal";
}

}  // namespace rnnen
