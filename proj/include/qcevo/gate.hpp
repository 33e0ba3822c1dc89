#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace qcevo {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2π).
double wrap_angle(double theta) noexcept;

/// Content of one genome cell. CX is split into its two roles so that every
/// cell of the matrix holds exactly one tag.
enum class GateKind : std::uint8_t { ID, X, SX, RZ, CX_CONTROL, CX_TARGET, H };

/// Entries of a gate set. CX expands to a control/target cell pair.
enum class BasisGate : std::uint8_t { ID, X, SX, RZ, CX, H };

using GateSet = std::vector<BasisGate>;

/// ID, X, SX, RZ, CX.
GateSet default_gate_set();

std::string_view to_string(GateKind kind) noexcept;
std::string_view to_string(BasisGate gate) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;
std::optional<BasisGate> parse_basis_gate(std::string_view name) noexcept;

class GateCell {
public:
    GateCell() = default;

    static GateCell id() { return GateCell{GateKind::ID, 0.0, std::nullopt}; }
    static GateCell x() { return GateCell{GateKind::X, 0.0, std::nullopt}; }
    static GateCell sx() { return GateCell{GateKind::SX, 0.0, std::nullopt}; }
    static GateCell h() { return GateCell{GateKind::H, 0.0, std::nullopt}; }
    static GateCell rz(double theta) { return GateCell{GateKind::RZ, wrap_angle(theta), std::nullopt}; }
    static GateCell cx_control(int target) { return GateCell{GateKind::CX_CONTROL, 0.0, target}; }
    static GateCell cx_target(int control) { return GateCell{GateKind::CX_TARGET, 0.0, control}; }

    /// Builds a parameterless single-qubit cell (ID, X, SX or H).
    static GateCell single(GateKind kind);

    /// Stores the fields verbatim. Used by deserialization; the result may be
    /// invalid and should go through validate().
    static GateCell unchecked(GateKind kind, double theta, std::optional<int> partner) {
        return GateCell{kind, theta, partner};
    }

    GateKind kind() const noexcept { return kind_; }
    double theta() const noexcept { return theta_; }
    std::optional<int> partner() const noexcept { return partner_; }

    bool is_identity() const noexcept { return kind_ == GateKind::ID; }
    bool is_cx() const noexcept { return kind_ == GateKind::CX_CONTROL || kind_ == GateKind::CX_TARGET; }
    bool is_single_qubit() const noexcept { return !is_cx(); }

    void set_theta(double theta) noexcept { theta_ = wrap_angle(theta); }

    friend bool operator==(const GateCell&, const GateCell&) = default;

private:
    GateCell(GateKind kind, double theta, std::optional<int> partner)
        : kind_(kind), theta_(theta), partner_(partner) {}

    GateKind kind_ = GateKind::ID;
    double theta_ = 0.0;
    std::optional<int> partner_;
};

}  // namespace qcevo
