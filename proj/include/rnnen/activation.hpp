#pragma once

#include "rnnen/types.hpp"

#include <optional>
#include <string_view>

namespace rnnen {

/// Scalar activation applied componentwise. All kinds satisfy sigma(0) = 0
/// and sigma'(0) = 1.
enum class ActivationKind { Identity, Tanh, NormalizedLogistic };

[[nodiscard]] Real activate(ActivationKind kind, Real xi) noexcept;
[[nodiscard]] Real activate_derivative(ActivationKind kind, Real xi) noexcept;
[[nodiscard]] Vector activate(ActivationKind kind, const Vector& xi);

[[nodiscard]] std::string_view activation_name(ActivationKind kind) noexcept;
[[nodiscard]] std::optional<ActivationKind> parse_activation(std::string_view name) noexcept;

}  // namespace rnnen
