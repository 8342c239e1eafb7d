#pragma once

#include "rnnen/rnn.hpp"
#include "rnnen/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace rnnen {

/// Outcome of one executable check. `pass` is metric <= tolerance for
/// norm-type checks; the linearization-order check compares a fitted slope
/// against `tolerance` as a lower bound instead (see `comparison`).
struct VerificationReport {
    std::string check;
    Real metric = 0.0;
    Real tolerance = 0.0;
    std::string comparison = "<=";  // "<=" or ">="
    bool pass = false;
    std::string note;
    std::map<std::string, Real> scalars;
    std::map<std::string, std::vector<Real>> series;
};

inline constexpr Real kEquivalenceTolerance = 1e-6;
inline constexpr Real kDualityTolerance = 1e-6;
inline constexpr Real kScaleInvarianceTolerance = 1e-9;
inline constexpr Real kCommutationTolerance = 1e-12;
inline constexpr Real kMinimumLinearizationOrder = 2.5;
inline constexpr Real kExactLinearBound = 1e-12;
inline constexpr Real kNoiseFloor = 1e-14;

/// simulate_linear(linearize(spec)) against simulate_en(synthesize_parallel(., C)).
[[nodiscard]] VerificationReport verify_equivalence(const ValidatedSpec& spec, const Vector& c, Real t_end, Real dt);

/// Parallel port voltages against series port currents.
[[nodiscard]] VerificationReport verify_duality(const ValidatedSpec& spec, const Vector& c, const Vector& l,
                                                Real t_end, Real dt);

/// Error of the linearization for h0 scaled by each amplitude; the metric is
/// the least-squares slope of log E against log a. Throws InvalidArgument
/// unless amplitudes strictly decrease, DegenerateFit if an error sits below
/// the noise floor. The identity activation has no remainder; it is reported
/// as exact-linear and passes when every error is at most kExactLinearBound.
[[nodiscard]] VerificationReport verify_linearization_order(const ValidatedSpec& spec,
                                                            const std::vector<Real>& amplitudes, Real t_end,
                                                            Real dt);

/// Jacobian at the origin of the Euler map (discretize, then linearize)
/// against I + dt A (linearize, then discretize).
[[nodiscard]] VerificationReport verify_commutation(const ValidatedSpec& spec, Real dt);

/// One-step maps compared by verify_commutation.
[[nodiscard]] Matrix euler_jacobian_at_origin(const ValidatedSpec& spec, Real dt);
[[nodiscard]] Matrix linear_euler_map(const LinearRnn& lin, Real dt);

/// Trajectories of two parallel syntheses with different capacitances.
[[nodiscard]] VerificationReport verify_scale_invariance(const ValidatedSpec& spec, const Vector& c1,
                                                         const Vector& c2, Real t_end, Real dt);

/// Least-squares slope of y against x.
[[nodiscard]] Real fitted_slope(const std::vector<Real>& x, const std::vector<Real>& y);

}  // namespace rnnen
