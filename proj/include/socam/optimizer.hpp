#pragma once

#include "socam/geometry.hpp"
#include "socam/kinematics.hpp"
#include "socam/loads.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace socam
{

/// Constraint values g1..g5 of the roller-pin design problem. Feasible means
/// g1 <= 0, g2 < 0, g3 < 0, g4 <= 0, g5 < 0.
struct ConstraintStatus
{
    double g1; // 1/pi - eta
    double g2; // alpha4 - 1/2
    std::optional<double> g3; // alpha4 - 1/(p kappa_p,max); empty when eta < 1/pi
    double g4; // alpha4 - eta + b/p
    double g5; // alpha5 - 1/4
    /// Ids 1..5 of the constraints with |g| below the activity tolerance.
    std::vector<int> active;

    [[nodiscard]] bool feasible() const noexcept;
    [[nodiscard]] bool is_active(int id) const noexcept;
};

/// Absolute tolerance on the dimensionless g values (5 um of a4 at p = 50 mm).
inline constexpr double activity_tol = 1e-4;

/// alpha5 derived from alpha4 through the bearing fit, p in mm.
[[nodiscard]] double alpha5_from_alpha4(double alpha4, double p) noexcept;

/// cos^2 of delta at psi: (2 pi eta - 1)^2 / ((2 pi eta - 1)^2 + (psi - pi)^2).
[[nodiscard]] double cos2_delta(const DesignParams& d, double psi) noexcept;

/// z = cos^2(delta_i) / alpha5^4, delta_i at the start of the mechanism's driving interval.
/// Throws DegeneratePin when a4 <= 5 mm.
[[nodiscard]] double objective_z(const DesignParams& d, Mechanism m);

[[nodiscard]] ConstraintStatus constraints(const DesignParams& d);

/// Largest roller radius satisfying every constraint at this eta: the objective
/// is decreasing in a4, so this is the inner optimum.
[[nodiscard]] double max_roller_radius(double p, double b, double eta);

struct EtaBounds
{
    double lo;
    double hi;
};

struct OptimizationResult
{
    double eta_opt;
    double a4_opt; // mm
    double a5_opt; // mm
    double z_opt;
    ConstraintStatus constraints;
    int iterations;
};

inline constexpr int optimizer_grid_points = 200;

/// Minimise z over eta within bounds, with a4 = max_roller_radius(eta).
/// Throws Infeasible when no eta admits a4 > 5 mm.
[[nodiscard]] OptimizationResult optimize(double p, double b, EtaBounds bounds,
                                          Mechanism m = Mechanism::CoaxialConjugate);

struct SweepRow
{
    double eta = 0.0;
    double a4 = 0.0;      // mm
    double a5 = 0.0;      // mm
    double z = 0.0;
    double vL_max = 0.0;  // mm
    double mu_min = 0.0;  // rad, |mu| at interval end
    double mu_max = 0.0;  // rad, |mu| at interval start
    double service = 0.0; // fraction
    std::string error;    // empty on success

    [[nodiscard]] bool ok() const noexcept { return error.empty(); }
};

struct SweepOptions
{
    double p = 50.0;
    double b = 9.5;
    PinSpec pin{};
    Mechanism mechanism = Mechanism::CoaxialConjugate;
    double threshold = default_pressure_threshold;
    /// Worker threads; 0 picks the hardware concurrency. Output order never depends on it.
    unsigned threads = 1;
};

/// One row: a4 from max_roller_radius, a5 from the bearing fit, then z,
/// worst pin deflection, pressure-angle extremes and service factor.
[[nodiscard]] SweepRow sweep_row(double eta, const SweepOptions& opt);

/// Rows in the order of etas. Row failures are recorded in SweepRow::error.
[[nodiscard]] std::vector<SweepRow> sweep(std::span<const double> etas, const SweepOptions& opt);

} // namespace socam
