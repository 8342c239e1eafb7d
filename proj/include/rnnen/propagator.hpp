#pragma once

#include "rnnen/signal.hpp"
#include "rnnen/types.hpp"

#include <string>
#include <vector>

namespace rnnen {

/// Exact sampled solution of dx/dt = A x + B u(t).
///
/// Each step advances by the matrix exponential e^{A h}. The forcing
/// integral over a step is evaluated with 5-point Gauss-Legendre quadrature,
/// splitting the step wherever u has a breakpoint.
class LtiPropagator {
public:
    LtiPropagator(Matrix a, Matrix b, InputSignal input);

    [[nodiscard]] Trajectory run(const Vector& x0, const TimeGrid& grid,
                                 std::vector<std::string> labels) const;

    [[nodiscard]] const Matrix& a() const noexcept { return a_; }

private:
    struct StepCache {
        Real h = 0.0;
        Matrix phi;
        std::vector<Matrix> weighted_kernels;  // w_q * e^{A (h - s_q)} * B
    };

    [[nodiscard]] StepCache make_cache(Real h) const;
    [[nodiscard]] Vector forcing(Real t0, Real h, const StepCache& cache) const;
    [[nodiscard]] Vector forcing_on(Real t0, Real h, Real a, Real b) const;

    Matrix a_;
    Matrix b_;
    InputSignal input_;
};

/// Spectral radius of a real square matrix.
[[nodiscard]] Real spectral_radius(const Matrix& a);

}  // namespace rnnen
