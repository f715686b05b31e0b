#include "socam/kinematics.hpp"

#include "socam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace socam
{

std::string_view to_string(Mechanism m) noexcept
{
    switch (m)
    {
    case Mechanism::CoaxialConjugate:
        return "coaxial";
    case Mechanism::NonCoaxialTriple:
        return "noncoaxial3";
    }
    return "unknown";
}

Mechanism parse_mechanism(std::string_view name)
{
    if (name == "coaxial")
        return Mechanism::CoaxialConjugate;
    if (name == "noncoaxial3")
        return Mechanism::NonCoaxialTriple;
    throw InvalidParameter("unknown mechanism '" + std::string(name) +
                           "' (expected coaxial or noncoaxial3)");
}

double pressure_angle(const DesignParams& d, double psi) noexcept
{
    const double num = 1.0 - two_pi * d.eta();
    const double t = psi - pi;
    if (t == 0.0)
        return std::copysign(pi / 2.0, num);
    return std::atan(num / t);
}

DrivingInterval driving_interval(const DesignParams& d, Mechanism m)
{
    const double delta = extended_angle(d);
    const double end = two_pi - delta;
    switch (m)
    {
    case Mechanism::CoaxialConjugate:
        return {pi - delta, end, m};
    case Mechanism::NonCoaxialTriple:
        return {4.0 * pi / 3.0 - delta, end, m};
    }
    throw InvalidParameter("unknown mechanism");
}

double service_factor(const DesignParams& d, Mechanism m, double threshold)
{
    return service_factor(d, driving_interval(d, m), threshold);
}

double service_factor(const DesignParams& d, const DrivingInterval& interval, double threshold)
{
    if (!(threshold > 0.0))
        throw InvalidParameter("pressure-angle threshold must be positive");
    const double len = interval.length();
    if (!(len > 0.0))
        throw InvalidParameter("driving interval must have positive length");
    if (threshold >= pi / 2.0)
        return 1.0;

    // |mu| <= threshold  <=>  |psi - pi| >= |1 - 2 pi eta| / tan(threshold)
    const double reach = std::abs(1.0 - two_pi * d.eta()) / std::tan(threshold);
    const auto overlap = [&](double lo, double hi) {
        return std::max(0.0, std::min(hi, interval.psi_end) - std::max(lo, interval.psi_start));
    };
    const double inf = std::numeric_limits<double>::infinity();
    const double good = overlap(-inf, pi - reach) + overlap(pi + reach, inf);
    return std::clamp(good / len, 0.0, 1.0);
}

double pitch_curvature(const DesignParams& d, double psi)
{
    const double eta = d.eta();
    const double c = two_pi * eta - 1.0;
    const double t2 = (psi - pi) * (psi - pi);
    const double num = t2 + 2.0 * c * (pi * eta - 1.0);
    const double den = std::pow(t2 + c * c, 1.5);
    return two_pi / d.p() * num / den;
}

CurveDerivatives pitch_curve_derivatives(const DesignParams& d, double psi) noexcept
{
    const double s = displacement(d, psi);
    const double ds = displacement_rate(d.p());
    const double e = d.e();
    const double sn = std::sin(psi);
    const double cs = std::cos(psi);
    return {(ds - e) * sn + s * cs, (ds - e) * cs - s * sn, (2.0 * ds - e) * cs - s * sn,
            -(2.0 * ds - e) * sn - s * cs};
}

double parametric_curvature(const CurveDerivatives& k) noexcept
{
    const double speed2 = k.du * k.du + k.dv * k.dv;
    return (k.dv * k.ddu - k.du * k.ddv) / std::pow(speed2, 1.5);
}

double kappa_p_max_two_maxima(double p, double eta) noexcept
{
    return 4.0 * pi / (3.0 * p * std::sqrt(6.0 * eta * pi - 3.0));
}

double kappa_p_max_single(double p, double eta) noexcept
{
    const double ep = eta * pi;
    return 4.0 * pi / p * (2.0 * ep * ep - 3.0 * ep + 1.0) /
           std::pow(4.0 * ep * ep - 4.0 * ep + 1.0, 1.5);
}

namespace
{

double discriminant(double eta) noexcept
{
    return -4.0 * eta * eta * pi * pi + 10.0 * eta * pi - 4.0;
}

} // namespace

double max_pitch_curvature(double p, double eta)
{
    if (std::abs(eta - 1.0 / two_pi) < eta_singularity_tol)
        throw InvalidParameter("eta = 1/(2 pi) is singular for the pitch curvature");
    // The quadratic factor has real roots exactly on (1/(2 pi), 2/pi).
    if (eta > 1.0 / two_pi && eta < 2.0 / pi)
        return kappa_p_max_two_maxima(p, eta);
    return kappa_p_max_single(p, eta);
}

CurvatureExtrema curvature_extrema(const DesignParams& d)
{
    const double eta = d.eta();
    if (eta < inv_pi)
        throw InvalidParameter("curvature extrema require a convex pitch curve (eta >= 1/pi), "
                               "got eta=" + std::to_string(eta));

    constexpr double boundary_tol = 1e-12;
    const double beta = discriminant(eta);
    CurvatureExtrema out{};
    out.discriminant = beta;

    if (std::abs(eta - 2.0 / pi) <= boundary_tol)
    {
        out.branch = CurvatureBranch::Boundary;
        out.roots = {{pi, ExtremumKind::Max}};
        out.kappa_p_max = kappa_p_max_single(d.p(), eta);
    }
    else if (eta < 2.0 / pi)
    {
        const double r = std::sqrt(beta);
        out.branch = CurvatureBranch::TwoMaxima;
        out.roots = {{pi - r, ExtremumKind::Max}, {pi, ExtremumKind::Min}, {pi + r, ExtremumKind::Max}};
        out.kappa_p_max = kappa_p_max_two_maxima(d.p(), eta);
    }
    else
    {
        out.branch = CurvatureBranch::SingleMaximum;
        out.roots = {{pi, ExtremumKind::Max}};
        out.kappa_p_max = kappa_p_max_single(d.p(), eta);
    }
    return out;
}

double cam_curvature(double kappa_p, double a4)
{
    const double den = 1.0 - a4 * kappa_p;
    if (std::abs(den) <= 1e-12)
        throw UndercutSingularity("1 - a4 * kappa_p vanishes: roller radius equals the pitch "
                                  "radius of curvature");
    return kappa_p / den;
}

double cam_curvature(const DesignParams& d, double psi)
{
    return cam_curvature(pitch_curvature(d, psi), d.a4());
}

FeasibilityReport feasibility(const DesignParams& d)
{
    FeasibilityReport r;
    const double eta = d.eta();
    r.eta_ok_lower = eta > 1.0 / two_pi;
    r.roller_fits_pitch = d.a4() <= d.p() / 2.0 - strict_margin;
    r.roller_clears_shaft = d.a4() <= d.e() - d.b();
    r.convex_pitch = eta >= inv_pi;
    r.no_undercut = d.a4() <= 1.0 / max_pitch_curvature(d.p(), eta) - strict_margin;
    r.all_ok = r.eta_ok_lower && r.roller_fits_pitch && r.roller_clears_shaft && r.convex_pitch &&
               r.no_undercut;
    return r;
}

} // namespace socam
