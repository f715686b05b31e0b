#pragma once

#include "socam/geometry.hpp"
#include "socam/kinematics.hpp"
#include "socam/loads.hpp"

#include <optional>
#include <string>
#include <vector>

namespace socam
{

/// Cam arrangement: phase of each cam's u-axis relative to cam 1 and the
/// position of each camshaft along the follower axis.
struct Layout
{
    Mechanism kind;
    std::vector<double> phases;    // rad
    std::vector<double> offsets_y; // mm

    [[nodiscard]] std::size_t cam_count() const noexcept { return phases.size(); }
};

/// Coaxial pair: phases {0, pi}, common shaft. Triple: phases {0, 2pi/3, 4pi/3},
/// shafts at {0, 4p/3, 8p/3}.
[[nodiscard]] Layout layout(const DesignParams& d, Mechanism kind);

/// Half-open shaft-angle interval [start, end) during which one cam drives.
struct CamDrive
{
    int cam; // 1-based
    double start;
    double end;

    friend bool operator==(const CamDrive&, const CamDrive&) = default;
};

/// One shaft turn, starting where cam 1 takes over.
struct DriveSchedule
{
    std::vector<CamDrive> drives;

    /// Cam scheduled at psi (any real angle; wrapped into the schedule's turn).
    [[nodiscard]] int cam_at(double psi) const;

    friend bool operator==(const DriveSchedule&, const DriveSchedule&) = default;
};

[[nodiscard]] DriveSchedule drive_schedule(const DesignParams& d, Mechanism kind);

/// Cam with the lowest |mu| among the cams able to drive at psi. A cam is able
/// to drive over local angles [pi, 2 pi - Delta). Ties go to the incoming cam.
[[nodiscard]] int driving_cam(const DesignParams& d, const Layout& lay, double delta, double psi);

/// Everything known about one design point for one mechanism. Quantities that
/// could not be computed are empty and the reason is recorded in errors.
struct AnalysisReport
{
    Mechanism mechanism = Mechanism::CoaxialConjugate;
    double p = 0.0;
    double eta = 0.0;
    double a4 = 0.0;
    double b = 0.0;
    PinSpec pin{};
    std::optional<double> a5;        // mm
    std::optional<double> delta;     // rad
    std::optional<double> psi_start; // rad
    std::optional<double> psi_end;   // rad
    std::optional<double> mu_min;    // rad, |mu|
    std::optional<double> mu_max;    // rad, |mu|
    std::optional<double> service;   // fraction
    std::optional<double> vL_max;    // mm
    std::optional<double> z;
    DriveSchedule schedule;
    FeasibilityReport feasibility;
    std::vector<std::string> errors;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

[[nodiscard]] AnalysisReport design_report(const DesignParams& d, const PinSpec& pin, Mechanism kind,
                                           double threshold = default_pressure_threshold);

} // namespace socam
