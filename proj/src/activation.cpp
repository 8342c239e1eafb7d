#include "rnnen/activation.hpp"

#include <cmath>

namespace rnnen {

Real activate(ActivationKind kind, Real xi) noexcept {
    switch (kind) {
    case ActivationKind::Identity:
        return xi;
    case ActivationKind::Tanh:
        return std::tanh(xi);
    case ActivationKind::NormalizedLogistic:
        // 4/(1+e^-x) - 2 == 2 tanh(x/2); the tanh form keeps sigma(0) exact.
        return 2.0 * std::tanh(0.5 * xi);
    }
    return xi;
}

Real activate_derivative(ActivationKind kind, Real xi) noexcept {
    switch (kind) {
    case ActivationKind::Identity:
        return 1.0;
    case ActivationKind::Tanh: {
        const Real t = std::tanh(xi);
        return 1.0 - t * t;
    }
    case ActivationKind::NormalizedLogistic: {
        const Real t = std::tanh(0.5 * xi);
        return 1.0 - t * t;
    }
    }
    return 1.0;
}

Vector activate(ActivationKind kind, const Vector& xi) {
    if (kind == ActivationKind::Identity) return xi;
    Vector out(xi.size());
    for (Index i = 0; i < xi.size(); ++i) out[i] = activate(kind, xi[i]);
    return out;
}

std::string_view activation_name(ActivationKind kind) noexcept {
    switch (kind) {
    case ActivationKind::Identity: return "identity";
    case ActivationKind::Tanh: return "tanh";
    case ActivationKind::NormalizedLogistic: return "normalized-logistic";
    }
    return "identity";
}

std::optional<ActivationKind> parse_activation(std::string_view name) noexcept {
    if (name == "identity") return ActivationKind::Identity;
    if (name == "tanh") return ActivationKind::Tanh;
    if (name == "normalized-logistic") return ActivationKind::NormalizedLogistic;
    return std::nullopt;
}

}  // namespace rnnen
