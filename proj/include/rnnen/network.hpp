#pragma once

#include "rnnen/rnn.hpp"
#include "rnnen/signal.hpp"
#include "rnnen/types.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace rnnen {

/// RNN data a network was synthesized from. Kept alongside the element
/// values so that extract_rnn can detect tampering and return the source
/// exactly.
struct Identification {
    Vector lambda;
    Matrix w;
    Matrix w_tilde;
};

/// n parallel R||C ports coupled through an admittance block
///
///     I(s) = alpha V(s) + beta U(s)
///
/// so that C dv/dt = -R^{-1} v + alpha v + beta u.
struct ParallelRcNetwork {
    Vector c;       // farads
    Vector r;       // ohms
    Matrix alpha;   // siemens, n x n
    Matrix beta;    // siemens, n x m
    Vector v0;      // volts
    InputSignal u;  // volts
    std::optional<Identification> source;

    [[nodiscard]] Index n() const noexcept { return c.size(); }
    [[nodiscard]] Index m() const noexcept { return beta.cols(); }
};

/// Dual realization: n series R-L loops coupled through an impedance block,
/// L di/dt = -R i + zeta i + beta_s u.
struct SeriesRlNetwork {
    Vector l;       // henries
    Vector r;       // ohms
    Matrix zeta;    // ohms, n x n
    Matrix beta_s;  // n x m
    Vector i0;      // amperes
    InputSignal u;
    std::optional<Identification> source;

    [[nodiscard]] Index n() const noexcept { return l.size(); }
    [[nodiscard]] Index m() const noexcept { return beta_s.cols(); }
};

using Network = std::variant<ParallelRcNetwork, SeriesRlNetwork>;

/// Element-value equality; the recorded source is provenance and ignored.
[[nodiscard]] bool same_elements(const ParallelRcNetwork& a, const ParallelRcNetwork& b);
[[nodiscard]] bool same_elements(const SeriesRlNetwork& a, const SeriesRlNetwork& b);
[[nodiscard]] bool same_elements(const Network& a, const Network& b);

/// Dynamics matrices of dx/dt = -Lambda x + Omega x + Omega_tilde u,
/// computed from element values alone.
struct NetworkDynamics {
    Vector lambda;  // diagonal of Lambda
    Matrix omega;
    Matrix omega_tilde;

    [[nodiscard]] Matrix state_matrix() const;
};

[[nodiscard]] NetworkDynamics dynamics(const ParallelRcNetwork& net);
[[nodiscard]] NetworkDynamics dynamics(const SeriesRlNetwork& net);
[[nodiscard]] NetworkDynamics dynamics(const Network& net);

/// R_k = 1/(lambda_k C_k), alpha = diag(C) w, beta = diag(C) w_tilde, v0 = h0.
/// Throws NonPositiveCapacitance.
[[nodiscard]] ParallelRcNetwork synthesize_parallel(const LinearRnn& lin, const Vector& c);
[[nodiscard]] ParallelRcNetwork synthesize_parallel(const LinearRnn& lin);

/// R_k = lambda_k L_k, zeta = diag(L) w, beta_s = diag(L) w_tilde, i0 = h0.
/// Throws NonPositiveInductance.
[[nodiscard]] SeriesRlNetwork synthesize_series(const LinearRnn& lin, const Vector& l);
[[nodiscard]] SeriesRlNetwork synthesize_series(const LinearRnn& lin);

/// Inverse of synthesize_*. Throws InconsistentNetwork if element values
/// disagree with the recorded source by more than 1e-9.
[[nodiscard]] LinearRnn extract_rnn(const ParallelRcNetwork& net);
[[nodiscard]] LinearRnn extract_rnn(const SeriesRlNetwork& net);
[[nodiscard]] LinearRnn extract_rnn(const Network& net);

enum class CouplingKind { Resistive, Gyrator };

struct CouplingElement {
    CouplingKind kind;
    Index k;  // 0-based ports, k <= j
    Index j;
    Real g;
};

/// Split of the coupling matrix into a reciprocal part (resistive couplings)
/// and a non-reciprocal part (ideal gyrators).
struct GyratorDecomposition {
    Matrix alpha_sym;
    Matrix alpha_anti;
    std::vector<CouplingElement> elements;
};

/// alpha_sym = (alpha + alpha^T)/2, alpha_anti = (alpha - alpha^T)/2. Their sum
/// reproduces alpha bit for bit when every entry sum and difference is
/// representable (e.g. dyadic entries); otherwise to within one ulp per entry.
[[nodiscard]] GyratorDecomposition gyrator_decompose(const Matrix& alpha);

}  // namespace rnnen
