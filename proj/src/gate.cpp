#include "qcevo/gate.hpp"

#include <array>
#include <cmath>

#include "qcevo/errors.hpp"

namespace qcevo {

double wrap_angle(double theta) noexcept {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value plus 2π can round up to exactly 2π.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

GateSet default_gate_set() { return {BasisGate::ID, BasisGate::X, BasisGate::SX, BasisGate::RZ, BasisGate::CX}; }

namespace {

constexpr std::array<std::string_view, 7> kKindNames{"ID", "X", "SX", "RZ", "CX_CONTROL", "CX_TARGET", "H"};
constexpr std::array<std::string_view, 6> kBasisNames{"ID", "X", "SX", "RZ", "CX", "H"};

}  // namespace

std::string_view to_string(GateKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

std::string_view to_string(BasisGate gate) noexcept { return kBasisNames[static_cast<std::size_t>(gate)]; }

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<GateKind>(i);
    }
    return std::nullopt;
}

std::optional<BasisGate> parse_basis_gate(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kBasisNames.size(); ++i) {
        if (kBasisNames[i] == name) return static_cast<BasisGate>(i);
    }
    return std::nullopt;
}

GateCell GateCell::single(GateKind kind) {
    switch (kind) {
        case GateKind::ID:
        case GateKind::X:
        case GateKind::SX:
        case GateKind::H:
            return GateCell{kind, 0.0, std::nullopt};
        default:
            throw InvariantViolation("GateCell::single called with " + std::string(to_string(kind)));
    }
}

}  // namespace qcevo
