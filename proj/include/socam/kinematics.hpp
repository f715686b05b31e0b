#pragma once

#include "socam/geometry.hpp"

#include <string_view>
#include <vector>

namespace socam
{

enum class Mechanism
{
    CoaxialConjugate,
    NonCoaxialTriple
};

[[nodiscard]] std::string_view to_string(Mechanism m) noexcept;
/// Accepts "coaxial" and "noncoaxial3". Throws InvalidParameter otherwise.
[[nodiscard]] Mechanism parse_mechanism(std::string_view name);

/// Shaft-angle interval over which one cam effectively drives the follower.
struct DrivingInterval
{
    double psi_start;
    double psi_end;
    Mechanism mechanism;

    [[nodiscard]] double length() const noexcept { return psi_end - psi_start; }
};

inline constexpr double default_pressure_threshold = pi / 6.0; // 30 deg

/// Pressure angle mu(psi) = atan((1 - 2 pi eta) / (psi - pi)).
/// At psi = pi returns the limit from the right, +-pi/2 with the sign of (1 - 2 pi eta).
[[nodiscard]] double pressure_angle(const DesignParams& d, double psi) noexcept;

/// Coaxial: [pi - Delta, 2 pi - Delta]. Non-coaxial triple, cam 1: [4 pi/3 - Delta, 2 pi - Delta].
[[nodiscard]] DrivingInterval driving_interval(const DesignParams& d, Mechanism m);

/// Fraction in [0, 1] of the driving interval where |mu| <= threshold.
[[nodiscard]] double service_factor(const DesignParams& d, Mechanism m,
                                    double threshold = default_pressure_threshold);
/// Same, on an explicit interval.
[[nodiscard]] double service_factor(const DesignParams& d, const DrivingInterval& interval,
                                    double threshold = default_pressure_threshold);

/// Closed-form curvature of the pitch curve.
[[nodiscard]] double pitch_curvature(const DesignParams& d, double psi);

/// First and second derivatives of the pitch curve with respect to psi.
struct CurveDerivatives
{
    double du;
    double dv;
    double ddu;
    double ddv;
};
[[nodiscard]] CurveDerivatives pitch_curve_derivatives(const DesignParams& d, double psi) noexcept;

/// Signed curvature of a planar parametric curve from its derivatives:
/// (v' u'' - u' v'') / (u'^2 + v'^2)^(3/2). Positive means convex.
[[nodiscard]] double parametric_curvature(const CurveDerivatives& k) noexcept;

enum class ExtremumKind
{
    Min,
    Max
};

enum class CurvatureBranch
{
    TwoMaxima,     // eta in [1/pi, 2/pi)
    SingleMaximum, // eta > 2/pi
    Boundary       // eta == 2/pi
};

struct CurvatureRoot
{
    double psi;
    ExtremumKind kind;
};

struct CurvatureExtrema
{
    std::vector<CurvatureRoot> roots;
    double kappa_p_max;
    CurvatureBranch branch;
    /// Discriminant -4 eta^2 pi^2 + 10 eta pi - 4 of the quadratic factor of kappa_p'.
    double discriminant;
};

/// Maximum pitch curvature when the quadratic factor has real roots (eta in (1/(2pi), 2/pi]).
[[nodiscard]] double kappa_p_max_two_maxima(double p, double eta) noexcept;
/// Maximum pitch curvature attained at psi = pi (eta >= 2/pi).
[[nodiscard]] double kappa_p_max_single(double p, double eta) noexcept;
/// Global max of kappa_p over all psi, picking the branch from eta. Requires eta > 1/(2 pi).
[[nodiscard]] double max_pitch_curvature(double p, double eta);

/// Stationary points of kappa_p and its maximum. Requires eta >= 1/pi.
[[nodiscard]] CurvatureExtrema curvature_extrema(const DesignParams& d);

/// kappa_c = kappa_p / (1 - a4 kappa_p). Throws UndercutSingularity when the
/// denominator vanishes.
[[nodiscard]] double cam_curvature(double kappa_p, double a4);
[[nodiscard]] double cam_curvature(const DesignParams& d, double psi);

struct FeasibilityReport
{
    bool eta_ok_lower = false;       // eta > 1/(2 pi)
    bool roller_fits_pitch = false;  // a4/p < 1/2
    bool roller_clears_shaft = false; // a4/p <= eta - b/p
    bool convex_pitch = false;       // eta >= 1/pi
    bool no_undercut = false;        // a4 < 1/kappa_p,max
    bool all_ok = false;

    friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

/// Margin applied to the strict inequalities.
inline constexpr double strict_margin = 1e-9;

[[nodiscard]] FeasibilityReport feasibility(const DesignParams& d);

} // namespace socam
