#include "qcevo/serialization.hpp"

#include <fstream>
#include <sstream>

#include "qcevo/errors.hpp"

namespace qcevo {

using nlohmann::json;

json solution_to_json(const SolutionMatrix& matrix) {
    json columns = json::array();
    for (const Column& column : matrix.columns()) {
        json cells = json::array();
        for (const GateCell& cell : column) {
            json c{{"kind", std::string(to_string(cell.kind()))}};
            if (cell.kind() == GateKind::RZ) c["theta"] = cell.theta();
            if (cell.partner()) c["partner"] = *cell.partner();
            cells.push_back(std::move(c));
        }
        columns.push_back(std::move(cells));
    }
    return json{{"num_qubits", matrix.num_qubits()}, {"columns", std::move(columns)}};
}

SolutionMatrix solution_from_json(const json& j) {
    try {
        const int n = j.at("num_qubits").get<int>();
        std::vector<Column> columns;
        for (const json& jc : j.at("columns")) {
            Column column;
            for (const json& cell : jc) {
                const auto name = cell.at("kind").get<std::string>();
                const auto kind = parse_gate_kind(name);
                if (!kind) throw InvariantViolation("unknown gate kind '" + name + "'");
                const double theta = cell.contains("theta") ? cell.at("theta").get<double>() : 0.0;
                std::optional<int> partner;
                if (cell.contains("partner")) partner = cell.at("partner").get<int>();
                column.push_back(GateCell::unchecked(*kind, theta, partner));
            }
            columns.push_back(std::move(column));
        }
        SolutionMatrix matrix(n, std::move(columns));
        if (auto err = validate(matrix)) throw InvariantViolation("invalid solution JSON: " + *err);
        return matrix;
    } catch (const json::exception& e) {
        throw InvariantViolation(std::string("malformed solution JSON: ") + e.what());
    }
}

json statevector_to_json(const Statevector& state) {
    json amps = json::array();
    for (const Amplitude& a : state.amplitudes()) amps.push_back(json::array({a.real(), a.imag()}));
    return json{{"num_qubits", state.num_qubits()}, {"amplitudes", std::move(amps)}};
}

Statevector statevector_from_json(const json& j) {
    try {
        std::vector<Amplitude> amps;
        for (const json& a : j.at("amplitudes")) amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        return Statevector(j.at("num_qubits").get<int>(), std::move(amps));
    } catch (const json::exception& e) {
        throw InvariantViolation(std::string("malformed statevector JSON: ") + e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string to_qasm(const SolutionMatrix& matrix) {
    std::ostringstream out;
    out.precision(17);
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << matrix.num_qubits() << "];\n";
    for (const Column& column : matrix.columns()) {
        const bool all_id = std::all_of(column.begin(), column.end(), [](const GateCell& g) { return g.is_identity(); });
        for (std::size_t q = 0; q < column.size(); ++q) {
            const GateCell& cell = column[q];
            switch (cell.kind()) {
                case GateKind::ID:
                    if (all_id) out << "id q[" << q << "];\n";
                    break;
                case GateKind::X: out << "x q[" << q << "];\n"; break;
                case GateKind::SX: out << "sx q[" << q << "];\n"; break;
                case GateKind::H: out << "h q[" << q << "];\n"; break;
                case GateKind::RZ: out << "rz(" << cell.theta() << ") q[" << q << "];\n"; break;
                case GateKind::CX_CONTROL: out << "cx q[" << q << "],q[" << *cell.partner() << "];\n"; break;
                case GateKind::CX_TARGET: break;
            }
        }
    }
    return out.str();
}

void export_qasm(const SolutionMatrix& matrix, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_qasm(matrix);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace qcevo
