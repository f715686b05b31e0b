#include "socam/loads.hpp"

#include "socam/errors.hpp"

#include <cmath>
#include <string>

namespace socam
{

PinModel::PinModel(double L, double tau, double E, double a5) : L_(L), tau_(tau), E_(E), a5_(a5)
{
    if (!(L > 0.0))
        throw InvalidParameter("pin length L must be positive");
    if (!(tau > 0.0))
        throw InvalidParameter("torque tau must be positive");
    if (!(E > 0.0))
        throw InvalidParameter("Young modulus E must be positive");
    if (!(a5 > 0.0))
        throw DegeneratePin("pin radius a5 must be positive, got " + std::to_string(a5));
}

double PinModel::I() const noexcept { return pi * std::pow(a5_, 4) / 4.0; }

double PinModel::beta() const noexcept { return 4.0 * L_ * L_ * L_ / (3.0 * E_ * pi); }

double vertical_force(const PinModel& pin, const DesignParams& d) noexcept
{
    return two_pi * pin.tau() / d.p();
}

double horizontal_force(const PinModel& pin, const DesignParams& d, double psi)
{
    const double delta = coefficients(d, psi).delta;
    if (delta == 0.0)
        throw InfiniteForce("delta = 0: the line of action passes through the camshaft axis");
    return vertical_force(pin, d) / std::tan(delta);
}

ForceState force_state(const PinModel& pin, const DesignParams& d, double psi)
{
    const double fy = vertical_force(pin, d);
    const double fx = horizontal_force(pin, d, psi);
    return {fy, fx, std::hypot(fx, fy), coefficients(d, psi).delta};
}

double pin_deflection(const PinModel& pin, const DesignParams& d, double psi)
{
    // F L^3 / (3 E I) with I = pi a5^4 / 4.
    return force_state(pin, d, psi).F * std::pow(pin.L(), 3) / (3.0 * pin.E() * pin.I());
}

double max_pin_deflection(const PinModel& pin, const DesignParams& d, Mechanism m)
{
    return max_pin_deflection(pin, d, driving_interval(d, m));
}

double max_pin_deflection(const PinModel& pin, const DesignParams& d,
                          const DrivingInterval& interval)
{
    const double t = interval.psi_start - pi;
    if (t == 0.0)
        throw InfiniteForce("driving interval starts at psi = pi");
    const double c = two_pi * d.eta() - 1.0;
    return pin.beta() * vertical_force(pin, d) / std::pow(pin.a5(), 4) *
           std::sqrt(c * c + t * t) / std::abs(t);
}

double bearing_pin_radius(double a4)
{
    if (!(a4 > bearing_offset))
        throw DegeneratePin("roller radius a4=" + std::to_string(a4) +
                            " mm gives a non-positive pin radius (needs a4 > 5 mm)");
    return (a4 - bearing_offset) / bearing_slope;
}

double bearing_roller_radius(double a5) noexcept { return bearing_slope * a5 + bearing_offset; }

} // namespace socam
