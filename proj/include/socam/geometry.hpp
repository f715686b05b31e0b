#pragma once

#include <numbers>
#include <vector>

namespace socam
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double inv_pi = std::numbers::inv_pi;

/// Directed angle between the cam axis and the follower translation.
inline constexpr double alpha1 = -pi / 2.0;

/// eta values closer than this to 1/(2 pi) are rejected as singular.
inline constexpr double eta_singularity_tol = 1e-6;

/// Geometric design point of one cam-roller pair. Lengths in mm.
///
/// The constructor checks only the type invariants (p > 0, a4 > 0, b >= 0 and
/// eta away from 1/(2 pi)). Geometric feasibility is a separate check, see
/// feasibility() in kinematics.hpp.
class DesignParams
{
  public:
    DesignParams(double p, double eta, double a4, double b);

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double eta() const noexcept { return eta_; }
    [[nodiscard]] double a4() const noexcept { return a4_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    /// Offset between the cam axis and the line of roller centers.
    [[nodiscard]] double e() const noexcept { return eta_ * p_; }

    /// Same design with a different roller radius.
    [[nodiscard]] DesignParams with_a4(double a4) const { return {p_, eta_, a4, b_}; }

    friend bool operator==(const DesignParams&, const DesignParams&) = default;

  private:
    double p_;
    double eta_;
    double a4_;
    double b_;
};

struct Point2
{
    double u = 0.0;
    double v = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Coefficients
{
    double b2;    // mm
    double b3;    // mm
    double delta; // rad
};

enum class CurveKind
{
    CamProfile,
    PitchCurve
};

struct ProfileSample
{
    double psi;
    double u;
    double v;

    friend bool operator==(const ProfileSample&, const ProfileSample&) = default;
};

struct ProfileCurve
{
    CurveKind kind = CurveKind::CamProfile;
    std::vector<ProfileSample> samples;

    friend bool operator==(const ProfileCurve&, const ProfileCurve&) = default;
};

inline constexpr int default_samples = 1024;
inline constexpr int min_samples = 16;

/// Follower displacement s(psi) = p psi / (2 pi) - p / 2.
[[nodiscard]] double displacement(double p, double psi) noexcept;
[[nodiscard]] inline double displacement(const DesignParams& d, double psi) noexcept
{
    return displacement(d.p(), psi);
}

/// s'(psi), constant.
[[nodiscard]] inline double displacement_rate(double p) noexcept { return p / two_pi; }

[[nodiscard]] Coefficients coefficients(const DesignParams& d, double psi);

/// Contact point C in the cam frame.
[[nodiscard]] Point2 cam_profile_point(const DesignParams& d, double psi);

/// Roller center O2 in the cam frame.
[[nodiscard]] Point2 pitch_curve_point(const DesignParams& d, double psi) noexcept;

/// Extended angle: the root of v_c(psi) = 0 closest to zero in (-pi, 0).
/// Throws NoRoot if v_c has no sign change there.
[[nodiscard]] double extended_angle(const DesignParams& d);

/// Uniform sampling. CamProfile spans [Delta, 2 pi - Delta], PitchCurve [0, 2 pi].
[[nodiscard]] ProfileCurve sample_profile(const DesignParams& d, CurveKind kind,
                                          int n_samples = default_samples);

} // namespace socam
