#pragma once

// JSON/CSV serialization and reproducible-output plumbing shared by the CLI
// and the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oqs/channels.hpp"
#include "oqs/lindblad.hpp"
#include "oqs/states.hpp"

namespace oqs::io {

inline constexpr const char* kToolVersion = "1.0.0";

// Matrices serialize as {dim, re: row-major array, im: row-major array}.
nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);

// {dim, kraus: [matrix...]} or {dim, choi: matrix}, optional
// trace_preserving flag (default true for kraus, false for choi-only).
nlohmann::json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const nlohmann::json& j);

// {dim, H: matrix, C: matrix, basis: "pauli" | [matrix...]}. With "pauli"
// the generator is a qubit one and C is the 3x3 Pauli-convention matrix.
nlohmann::json generator_to_json(const LindbladGenerator& g);
LindbladGenerator generator_from_json(const nlohmann::json& j);

DensityMatrix state_from_json(const nlohmann::json& j);

// Throws ValidationError("FileNotFound") / ("MalformedJson").
nlohmann::json load_json_file(const std::string& path);

// Everything written to disk embeds the tool version, a config echo, and
// the seed in effect.
struct OutputMeta {
  std::string config_echo;
  std::uint64_t seed = 0;
};

// Config seed unless the LINDBLAD_SEED environment variable overrides it.
std::uint64_t resolve_seed(std::uint64_t config_seed);

// Deterministic shortest round-trip formatting for doubles.
std::string format_double(double x);

// CSV with '#'-prefixed metadata header lines, then a column-name row,
// then the data rows.
void write_csv(const std::string& path, const OutputMeta& meta,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

// JSON object payload wrapped with {tool_version, config, seed}.
void write_json(const std::string& path, const OutputMeta& meta,
                const nlohmann::json& payload);

// Companion gnuplot script plotting the named CSV columns against the first.
void write_gnuplot(const std::string& csv_path,
                   const std::vector<std::string>& columns);

}  // namespace oqs::io
