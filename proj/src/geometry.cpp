#include "socam/geometry.hpp"

#include "socam/errors.hpp"
#include "socam/numeric.hpp"

#include <cmath>
#include <string>

namespace socam
{

DesignParams::DesignParams(double p, double eta, double a4, double b)
    : p_(p), eta_(eta), a4_(a4), b_(b)
{
    if (!(p > 0.0) || !std::isfinite(p))
        throw InvalidParameter("pitch p must be positive, got " + std::to_string(p));
    if (!(a4 > 0.0) || !std::isfinite(a4))
        throw InvalidParameter("roller radius a4 must be positive, got " + std::to_string(a4));
    if (!(b >= 0.0) || !std::isfinite(b))
        throw InvalidParameter("shaft radius b must be non-negative, got " + std::to_string(b));
    if (!std::isfinite(eta))
        throw InvalidParameter("eta must be finite");
    if (std::abs(eta - 1.0 / two_pi) < eta_singularity_tol)
        throw InvalidParameter("eta = 1/(2 pi) is singular: b3 and delta are undefined "
                               "(2 pi eta - 1 = 0)");
}

double displacement(double p, double psi) noexcept { return p / two_pi * psi - p / 2.0; }

Coefficients coefficients(const DesignParams& d, double psi)
{
    const double c = two_pi * d.eta() - 1.0;
    const double t = psi - pi;
    const double b2 = d.p() / two_pi;
    return {b2, b2 * std::sqrt(c * c + t * t), std::atan(t / c)};
}

Point2 cam_profile_point(const DesignParams& d, double psi)
{
    const auto [b2, b3, delta] = coefficients(d, psi);
    const double r = b3 - d.a4();
    return {b2 * std::cos(psi) + r * std::cos(delta - psi),
            -b2 * std::sin(psi) + r * std::sin(delta - psi)};
}

Point2 pitch_curve_point(const DesignParams& d, double psi) noexcept
{
    const double s = displacement(d, psi);
    const double e = d.e();
    return {e * std::cos(psi) + s * std::sin(psi), -e * std::sin(psi) + s * std::cos(psi)};
}

double extended_angle(const DesignParams& d)
{
    constexpr double hi = -1e-12;
    constexpr double lo = -pi + 1e-6;
    constexpr int scan_steps = 512;

    const auto vc = [&d](double psi) { return cam_profile_point(d, psi).v; };

    // Walk away from zero so the first bracketed sign change is the root nearest zero.
    double right = hi;
    double f_right = vc(right);
    for (int i = 1; i <= scan_steps; ++i)
    {
        const double left = hi + (lo - hi) * static_cast<double>(i) / scan_steps;
        const double f_left = vc(left);
        if (f_right == 0.0)
            return right;
        if ((f_left < 0.0) != (f_right < 0.0) || f_left == 0.0)
        {
            if (auto root = numeric::bisect(vc, left, right, 1e-12))
                return *root;
        }
        right = left;
        f_right = f_left;
    }
    throw NoRoot("v_c(psi) has no sign change on (-pi, 0): no extended angle for eta=" +
                 std::to_string(d.eta()) + ", a4=" + std::to_string(d.a4()));
}

ProfileCurve sample_profile(const DesignParams& d, CurveKind kind, int n_samples)
{
    if (n_samples < min_samples)
        throw InvalidParameter("n_samples must be at least " + std::to_string(min_samples));

    double first = 0.0;
    double last = two_pi;
    if (kind == CurveKind::CamProfile)
    {
        const double delta = extended_angle(d);
        first = delta;
        last = two_pi - delta;
    }

    ProfileCurve curve{kind, {}};
    curve.samples.reserve(static_cast<std::size_t>(n_samples));
    const double step = (last - first) / static_cast<double>(n_samples - 1);
    for (int i = 0; i < n_samples; ++i)
    {
        const double psi = (i == n_samples - 1) ? last : first + step * static_cast<double>(i);
        const Point2 pt =
            kind == CurveKind::CamProfile ? cam_profile_point(d, psi) : pitch_curve_point(d, psi);
        curve.samples.push_back({psi, pt.u, pt.v});
    }
    return curve;
}

} // namespace socam
