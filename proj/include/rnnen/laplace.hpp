#pragma once

#include "rnnen/rnn.hpp"
#include "rnnen/types.hpp"

#include <vector>

namespace rnnen {

struct ParallelRcNetwork;

/// A transfer function value kept as numerator and denominator so that poles
/// stay visible to the caller.
struct RationalEval {
    Complex numerator;
    Complex denominator;

    [[nodiscard]] Complex value() const { return numerator / denominator; }
};

enum class StabilityVerdict { AsymptoticallyStable, Marginal, Unstable };

struct StabilityReport {
    std::vector<Complex> eigenvalues;  // sorted by (real, imag) ascending
    Real spectral_abscissa = 0.0;
    StabilityVerdict verdict = StabilityVerdict::Marginal;
};

/// |max Re| at or below this counts as marginal.
inline constexpr Real kMarginalBand = 1e-12;

/// H_k(s) = h_k(0) / (s + lambda_k) in numerator/denominator form.
[[nodiscard]] RationalEval decay_transfer_eval(Real lambda_k, Real h_k0, Complex s);
/// Throws PoleEvaluation at s = -lambda_k.
[[nodiscard]] Complex decay_transfer(Real lambda_k, Real h_k0, Complex s);

/// Solves (s I - A) V = v0 + B U. Throws SingularResolvent when s is a pole.
[[nodiscard]] ComplexVector resolvent_apply(const Matrix& a, const Matrix& b, Complex s,
                                            const ComplexVector& v0, const ComplexVector& u);
/// A = w - lambda, B = w_tilde.
[[nodiscard]] ComplexVector system_transfer_apply(const LinearRnn& lin, Complex s,
                                                  const ComplexVector& v0, const ComplexVector& u);
/// (s I + Lambda - Omega) V = v0 + Omega_tilde U.
[[nodiscard]] ComplexVector system_transfer_apply(const ParallelRcNetwork& net, Complex s,
                                                  const ComplexVector& v0, const ComplexVector& u);

[[nodiscard]] StabilityReport analyze_stability(const Matrix& a);
[[nodiscard]] StabilityReport poles_and_stability(const LinearRnn& lin);

[[nodiscard]] const char* verdict_name(StabilityVerdict verdict) noexcept;

}  // namespace rnnen
