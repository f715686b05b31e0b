#pragma once

#include "socam/geometry.hpp"
#include "socam/kinematics.hpp"

namespace socam
{

/// Pin length, motor torque and material, without the radius.
struct PinSpec
{
    double L = 10.0;    // mm
    double tau = 1200.0; // N*mm
    double E = 2.0e5;   // MPa

    friend bool operator==(const PinSpec&, const PinSpec&) = default;
};

/// Roller pin modelled as a cantilever loaded at its free end.
/// Units: L and a5 in mm, tau in N*mm, E in MPa (N/mm^2).
class PinModel
{
  public:
    PinModel(double L, double tau, double E, double a5);
    PinModel(const PinSpec& spec, double a5) : PinModel(spec.L, spec.tau, spec.E, a5) {}

    [[nodiscard]] double L() const noexcept { return L_; }
    [[nodiscard]] double tau() const noexcept { return tau_; }
    [[nodiscard]] double E() const noexcept { return E_; }
    [[nodiscard]] double a5() const noexcept { return a5_; }

    /// Second moment of area pi a5^4 / 4, mm^4.
    [[nodiscard]] double I() const noexcept;
    /// 4 L^3 / (3 E pi); tip deflection is beta |f| / a5^4.
    [[nodiscard]] double beta() const noexcept;

    [[nodiscard]] PinModel with_a5(double a5) const { return {L_, tau_, E_, a5}; }

  private:
    double L_;
    double tau_;
    double E_;
    double a5_;
};

struct ForceState
{
    double f_y;   // N, constant F0
    double f_x;   // N
    double F;     // N
    double delta; // rad
};

/// Constant vertical force component F0 = 2 pi tau / p.
[[nodiscard]] double vertical_force(const PinModel& pin, const DesignParams& d) noexcept;

/// f_x = F0 / tan(delta(psi)). Throws InfiniteForce at delta = 0.
[[nodiscard]] double horizontal_force(const PinModel& pin, const DesignParams& d, double psi);

[[nodiscard]] ForceState force_state(const PinModel& pin, const DesignParams& d, double psi);

/// Tip deflection (beta / a5^4) |f| at one cam angle, mm.
[[nodiscard]] double pin_deflection(const PinModel& pin, const DesignParams& d, double psi);

/// Worst-case tip deflection over the driving interval of the mechanism, mm.
/// The maximum sits at the interval start.
[[nodiscard]] double max_pin_deflection(const PinModel& pin, const DesignParams& d, Mechanism m);
[[nodiscard]] double max_pin_deflection(const PinModel& pin, const DesignParams& d,
                                        const DrivingInterval& interval);

// Series-2 bearing fit: outer diameter D ~ 1.6 d + 10 mm, i.e. a4 ~ 1.6 a5 + 5.
inline constexpr double bearing_slope = 1.6;
inline constexpr double bearing_offset = 5.0; // mm, on radii

/// Pin radius for a roller radius. Throws DegeneratePin when a4 <= 5 mm.
[[nodiscard]] double bearing_pin_radius(double a4);
/// Roller radius for a pin radius.
[[nodiscard]] double bearing_roller_radius(double a5) noexcept;

} // namespace socam
