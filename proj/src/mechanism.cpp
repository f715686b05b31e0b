#include "socam/mechanism.hpp"

#include "socam/errors.hpp"
#include "socam/optimizer.hpp"

#include <cmath>

namespace socam
{

Layout layout(const DesignParams& d, Mechanism kind)
{
    switch (kind)
    {
    case Mechanism::CoaxialConjugate:
        return {kind, {0.0, pi}, {0.0, 0.0}};
    case Mechanism::NonCoaxialTriple: {
        const double p = d.p();
        const double y12 = p / 2.0 + p + displacement(p, two_pi / 3.0);
        const double y13 = p / 2.0 + 2.0 * p + displacement(p, 2.0 * two_pi / 3.0);
        return {kind, {0.0, two_pi / 3.0, 2.0 * two_pi / 3.0}, {0.0, y12, y13}};
    }
    }
    throw InvalidParameter("unknown mechanism");
}

namespace
{

/// Shaft angle psi seen by a cam with the given phase, wrapped into [pi, 3 pi).
double local_angle(double psi, double phase)
{
    double t = std::fmod(psi - phase - pi, two_pi);
    if (t < 0.0)
        t += two_pi;
    return t + pi;
}

} // namespace

int driving_cam(const DesignParams& d, const Layout& lay, double delta, double psi)
{
    int best = 0;
    double best_mu = 0.0;
    double best_local = 0.0;
    for (std::size_t k = 0; k < lay.cam_count(); ++k)
    {
        const double local = local_angle(psi, lay.phases[k]);
        if (!(local < two_pi - delta))
            continue;
        const double mu = std::abs(pressure_angle(d, local));
        const int cam = static_cast<int>(k) + 1;
        if (best == 0 || mu < best_mu || (mu == best_mu && local < best_local))
        {
            best = cam;
            best_mu = mu;
            best_local = local;
        }
    }
    if (best == 0)
        throw NoRoot("no cam is able to drive at psi=" + std::to_string(psi));
    return best;
}

DriveSchedule drive_schedule(const DesignParams& d, Mechanism kind)
{
    const double delta = extended_angle(d);
    const Layout lay = layout(d, kind);
    // Each cam hands over when its own capability ends at 2 pi - Delta + phase.
    const double first = driving_interval(d, kind).psi_start;
    DriveSchedule sched;
    double start = first;
    for (std::size_t k = 0; k < lay.cam_count(); ++k)
    {
        const double end = two_pi - delta + lay.phases[k];
        sched.drives.push_back({static_cast<int>(k) + 1, start, end});
        start = end;
    }
    return sched;
}

int DriveSchedule::cam_at(double psi) const
{
    if (drives.empty())
        throw InvalidParameter("empty drive schedule");
    const double first = drives.front().start;
    double t = std::fmod(psi - first, two_pi);
    if (t < 0.0)
        t += two_pi;
    const double wrapped = first + t;
    for (const auto& drv : drives)
    {
        if (wrapped >= drv.start && wrapped < drv.end)
            return drv.cam;
    }
    return drives.back().cam;
}

AnalysisReport design_report(const DesignParams& d, const PinSpec& pin, Mechanism kind,
                             double threshold)
{
    AnalysisReport r;
    r.mechanism = kind;
    r.p = d.p();
    r.eta = d.eta();
    r.a4 = d.a4();
    r.b = d.b();
    r.pin = pin;
    r.feasibility = feasibility(d);

    const auto attempt = [&r](auto&& fn) {
        try
        {
            fn();
        }
        catch (const Error& ex)
        {
            r.errors.emplace_back(ex.what());
        }
    };

    attempt([&] { r.a5 = bearing_pin_radius(d.a4()); });

    DrivingInterval interval{};
    bool have_interval = false;
    attempt([&] {
        r.delta = extended_angle(d);
        interval = driving_interval(d, kind);
        have_interval = true;
        r.psi_start = interval.psi_start;
        r.psi_end = interval.psi_end;
        r.schedule = drive_schedule(d, kind);
    });
    if (!have_interval)
        return r;

    r.mu_max = std::abs(pressure_angle(d, interval.psi_start));
    r.mu_min = std::abs(pressure_angle(d, interval.psi_end));
    attempt([&] { r.service = service_factor(d, interval, threshold); });
    if (r.a5)
    {
        attempt([&] {
            r.vL_max = max_pin_deflection(PinModel(pin, *r.a5), d, interval);
            r.z = cos2_delta(d, interval.psi_start) / std::pow(*r.a5 / d.p(), 4);
        });
    }
    return r;
}

} // namespace socam
