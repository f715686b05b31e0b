#pragma once

#include "socam/geometry.hpp"
#include "socam/mechanism.hpp"
#include "socam/optimizer.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace socam::io
{

inline constexpr std::string_view profile_csv_header = "psi_rad,u_mm,v_mm";
inline constexpr std::string_view sweep_csv_header =
    "eta,a4_mm,a5_mm,z,vLmax_um,mu_min_deg,mu_max_deg,service_pct,error";

/// eta columns of the published coaxial and non-coaxial design tables.
[[nodiscard]] std::vector<double> table1_etas();
[[nodiscard]] std::vector<double> table2_etas();

[[nodiscard]] double deg(double rad) noexcept;
[[nodiscard]] double rad(double deg) noexcept;

// Profiles ------------------------------------------------------------------

/// LF line endings, 9 significant digits.
[[nodiscard]] std::string profile_to_csv(const ProfileCurve& curve);
/// Throws InvalidParameter on a malformed file.
[[nodiscard]] ProfileCurve profile_from_csv(std::string_view text,
                                            CurveKind kind = CurveKind::CamProfile);

/// One closed path per curve, millimetre user units. The v axis is negated so
/// that the drawing reads with v up on screen.
[[nodiscard]] std::string profiles_to_svg(std::span<const ProfileCurve> curves);

[[nodiscard]] nlohmann::json profile_to_json(const ProfileCurve& curve);

// Sweep tables --------------------------------------------------------------

enum class Rounding
{
    Full,  // 17 significant digits, round-trips exactly
    Table  // display precision of the published design tables
};

[[nodiscard]] std::string sweep_to_csv(std::span<const SweepRow> rows, Rounding rounding = Rounding::Full);
/// Reads a sweep CSV. Lengths come back in mm and angles in rad, as in SweepRow.
[[nodiscard]] std::vector<SweepRow> sweep_from_csv(std::string_view text);

// Reports -------------------------------------------------------------------

[[nodiscard]] nlohmann::json report_to_json(const AnalysisReport& r);
[[nodiscard]] AnalysisReport report_from_json(const nlohmann::json& j);
[[nodiscard]] std::string report_to_text(const AnalysisReport& r);

[[nodiscard]] nlohmann::json optimization_to_json(const OptimizationResult& r);
[[nodiscard]] std::string optimization_to_text(const OptimizationResult& r);

[[nodiscard]] nlohmann::json layout_to_json(const Layout& lay, const DriveSchedule& sched);
[[nodiscard]] std::string layout_to_text(const Layout& lay, const DriveSchedule& sched);

} // namespace socam::io
