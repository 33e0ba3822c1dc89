#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "qcevo/simulator.hpp"
#include "qcevo/solution_matrix.hpp"

namespace qcevo {

// {"num_qubits": n, "columns": [[{"kind": "RZ", "theta": 1.5708}, {"kind": "CX_CONTROL", "partner": 2}, ...], ...]}
nlohmann::json solution_to_json(const SolutionMatrix& matrix);
/// Throws InvariantViolation on malformed input or a genome that fails validate().
SolutionMatrix solution_from_json(const nlohmann::json& j);

// {"num_qubits": n, "amplitudes": [[re, im], ...]}
nlohmann::json statevector_to_json(const Statevector& state);
Statevector statevector_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// OpenQASM 2.0, one statement per non-ID cell, columns left to right. All-ID
/// columns are emitted as `id` statements so the layer structure stays visible.
std::string to_qasm(const SolutionMatrix& matrix);
void export_qasm(const SolutionMatrix& matrix, const std::filesystem::path& path);

}  // namespace qcevo
