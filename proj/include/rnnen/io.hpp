#pragma once

#include "rnnen/laplace.hpp"
#include "rnnen/network.hpp"
#include "rnnen/rnn.hpp"
#include "rnnen/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace rnnen {

/// Spec document keys: n, m, lambda, w, w_tilde, activation, h0, input.
/// Unknown keys are rejected. Throws ParseError(key) for malformed
/// documents and ValidationError(key) when the RnnSpec invariants fail.
[[nodiscard]] ValidatedSpec spec_from_json(const nlohmann::json& doc);
[[nodiscard]] ValidatedSpec parse_spec(const std::string& text);
[[nodiscard]] ValidatedSpec load_spec(const std::filesystem::path& path);

[[nodiscard]] nlohmann::json spec_to_json(const RnnSpec& spec);
void save_spec(const RnnSpec& spec, const std::filesystem::path& path);

/// Two neurons, lambda = (1, 2), w = [[0, 0.5], [-0.5, 0]], tanh, h0 = (1, -1),
/// no input. Its linearization has the double eigenvalue -1.5.
[[nodiscard]] RnnSpec canonical_spec();

/// "t,<label...>" header then one row per sample, %.17g.
[[nodiscard]] std::string format_trajectory(const Trajectory& traj);
void write_trajectory(const Trajectory& traj, const std::filesystem::path& path);

[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& report);
[[nodiscard]] nlohmann::json stability_to_json(const StabilityReport& report);
[[nodiscard]] nlohmann::json network_to_json(const Network& net);
[[nodiscard]] nlohmann::json linear_to_json(const LinearRnn& lin);

/// Reads a whole file; throws IoError.
[[nodiscard]] std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rnnen
