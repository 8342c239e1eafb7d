#include "rnnen/network.hpp"

#include "rnnen/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rnnen {

namespace {

constexpr Real kConsistencyTolerance = 1e-9;

void require_positive(const Vector& v, Errc code, const char* field) {
    for (Index k = 0; k < v.size(); ++k) {
        if (!(v[k] > 0.0) || !std::isfinite(v[k])) {
            throw Error(code, std::string(field) + "[" + std::to_string(k) + "]",
                        "element value must be positive and finite");
        }
    }
}

void require_split(const LinearRnn& lin, Index elements, const char* field) {
    const Index n = lin.n();
    if (elements != n) {
        throw Error(Errc::DimensionMismatch, field,
                    "expected " + std::to_string(n) + " values, got " + std::to_string(elements));
    }
    if (lin.lambda.size() != n || lin.w.rows() != n || lin.w.cols() != n) {
        throw Error(Errc::DimensionMismatch, "lambda",
                    "synthesis needs the lambda / w split of the state matrix");
    }
    require_positive(lin.lambda, Errc::NonPositiveLambda, "lambda");
    if (lin.w_tilde.rows() != n) {
        throw Error(Errc::DimensionMismatch, "w_tilde", "row count differs from neuron count");
    }
}

bool close(const Matrix& got, const Matrix& want) {
    if (got.rows() != want.rows() || got.cols() != want.cols()) return false;
    for (Index i = 0; i < got.rows(); ++i) {
        for (Index j = 0; j < got.cols(); ++j) {
            const Real scale = std::max<Real>(1.0, std::abs(want(i, j)));
            if (!(std::abs(got(i, j) - want(i, j)) <= kConsistencyTolerance * scale)) return false;
        }
    }
    return true;
}

LinearRnn extract(const NetworkDynamics& dyn, const std::optional<Identification>& source, const Vector& x0,
                  const InputSignal& u) {
    if (source) {
        if (!close(dyn.lambda, source->lambda)) {
            throw Error(Errc::InconsistentNetwork, "R", "port time constants disagree with the recorded lambda");
        }
        if (!close(dyn.omega, source->w)) {
            throw Error(Errc::InconsistentNetwork, "alpha", "coupling block disagrees with the recorded w");
        }
        if (!close(dyn.omega_tilde, source->w_tilde)) {
            throw Error(Errc::InconsistentNetwork, "beta", "input coupling disagrees with the recorded w_tilde");
        }
        return make_linear_rnn(source->lambda, source->w, source->w_tilde, x0, u);
    }
    return make_linear_rnn(dyn.lambda, dyn.omega, dyn.omega_tilde, x0, u);
}

}  // namespace

Matrix NetworkDynamics::state_matrix() const {
    Matrix a = omega;
    a.diagonal() -= lambda;
    return a;
}

bool same_elements(const ParallelRcNetwork& a, const ParallelRcNetwork& b) {
    return a.c.size() == b.c.size() && a.c == b.c && a.r == b.r && a.alpha.rows() == b.alpha.rows() &&
           a.alpha == b.alpha && a.beta.cols() == b.beta.cols() && a.beta == b.beta && a.v0 == b.v0 &&
           a.u == b.u;
}

bool same_elements(const SeriesRlNetwork& a, const SeriesRlNetwork& b) {
    return a.l.size() == b.l.size() && a.l == b.l && a.r == b.r && a.zeta.rows() == b.zeta.rows() &&
           a.zeta == b.zeta && a.beta_s.cols() == b.beta_s.cols() && a.beta_s == b.beta_s && a.i0 == b.i0 &&
           a.u == b.u;
}

bool same_elements(const Network& a, const Network& b) {
    if (a.index() != b.index()) return false;
    if (const auto* p = std::get_if<ParallelRcNetwork>(&a)) return same_elements(*p, std::get<ParallelRcNetwork>(b));
    return same_elements(std::get<SeriesRlNetwork>(a), std::get<SeriesRlNetwork>(b));
}

NetworkDynamics dynamics(const ParallelRcNetwork& net) {
    NetworkDynamics dyn;
    const Vector inv_c = net.c.cwiseInverse();
    dyn.lambda = (net.r.cwiseProduct(net.c)).cwiseInverse();
    dyn.omega = inv_c.asDiagonal() * net.alpha;
    dyn.omega_tilde = inv_c.asDiagonal() * net.beta;
    return dyn;
}

NetworkDynamics dynamics(const SeriesRlNetwork& net) {
    NetworkDynamics dyn;
    const Vector inv_l = net.l.cwiseInverse();
    dyn.lambda = net.r.cwiseProduct(inv_l);
    dyn.omega = inv_l.asDiagonal() * net.zeta;
    dyn.omega_tilde = inv_l.asDiagonal() * net.beta_s;
    return dyn;
}

NetworkDynamics dynamics(const Network& net) {
    return std::visit([](const auto& concrete) { return dynamics(concrete); }, net);
}

ParallelRcNetwork synthesize_parallel(const LinearRnn& lin, const Vector& c) {
    require_split(lin, c.size(), "capacitance");
    require_positive(c, Errc::NonPositiveCapacitance, "capacitance");
    ParallelRcNetwork net;
    net.c = c;
    net.r = (lin.lambda.cwiseProduct(c)).cwiseInverse();
    net.alpha = c.asDiagonal() * lin.w;
    net.beta = c.asDiagonal() * lin.w_tilde;
    net.v0 = lin.h0;
    net.u = lin.input;
    net.source = Identification{lin.lambda, lin.w, lin.w_tilde};
    return net;
}

ParallelRcNetwork synthesize_parallel(const LinearRnn& lin) {
    return synthesize_parallel(lin, Vector::Ones(lin.n()));
}

SeriesRlNetwork synthesize_series(const LinearRnn& lin, const Vector& l) {
    require_split(lin, l.size(), "inductance");
    require_positive(l, Errc::NonPositiveInductance, "inductance");
    SeriesRlNetwork net;
    net.l = l;
    net.r = lin.lambda.cwiseProduct(l);
    net.zeta = l.asDiagonal() * lin.w;
    net.beta_s = l.asDiagonal() * lin.w_tilde;
    net.i0 = lin.h0;
    net.u = lin.input;
    net.source = Identification{lin.lambda, lin.w, lin.w_tilde};
    return net;
}

SeriesRlNetwork synthesize_series(const LinearRnn& lin) {
    return synthesize_series(lin, Vector::Ones(lin.n()));
}

LinearRnn extract_rnn(const ParallelRcNetwork& net) {
    require_positive(net.c, Errc::NonPositiveCapacitance, "C");
    require_positive(net.r, Errc::InconsistentNetwork, "R");
    return extract(dynamics(net), net.source, net.v0, net.u);
}

LinearRnn extract_rnn(const SeriesRlNetwork& net) {
    require_positive(net.l, Errc::NonPositiveInductance, "L");
    require_positive(net.r, Errc::InconsistentNetwork, "R");
    return extract(dynamics(net), net.source, net.i0, net.u);
}

LinearRnn extract_rnn(const Network& net) {
    return std::visit([](const auto& concrete) { return extract_rnn(concrete); }, net);
}

GyratorDecomposition gyrator_decompose(const Matrix& alpha) {
    if (alpha.rows() != alpha.cols()) {
        throw Error(Errc::DimensionMismatch, "alpha", "coupling matrix must be square");
    }
    GyratorDecomposition out;
    const Index n = alpha.rows();
    const Matrix alpha_t = alpha.transpose();
    out.alpha_sym = 0.5 * (alpha + alpha_t);
    out.alpha_anti = 0.5 * (alpha - alpha_t);
    for (Index k = 0; k < n; ++k) {
        for (Index j = k; j < n; ++j) {
            if (out.alpha_sym(k, j) != 0.0) {
                out.elements.push_back({CouplingKind::Resistive, k, j, out.alpha_sym(k, j)});
            }
        }
    }
    for (Index k = 0; k < n; ++k) {
        for (Index j = k + 1; j < n; ++j) {
            if (out.alpha_anti(k, j) != 0.0) {
                out.elements.push_back({CouplingKind::Gyrator, k, j, out.alpha_anti(k, j)});
            }
        }
    }
    return out;
}

}  // namespace rnnen
