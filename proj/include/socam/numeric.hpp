#pragma once

#include <cmath>
#include <optional>

namespace socam::numeric
{

/// Bisection on [lo, hi]; requires f(lo) and f(hi) of opposite sign (or a zero at an end).
/// Returns nullopt when the bracket holds no sign change.
template <class F>
[[nodiscard]] std::optional<double> bisect(const F& f, double lo, double hi, double xtol,
                                           int max_iter = 200)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        return std::nullopt;

    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid < 0.0) == (flo < 0.0))
        {
            lo = mid;
            flo = fmid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Minimum
{
    double x;
    double fx;
    int iterations;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
template <class F>
[[nodiscard]] Minimum golden_section(const F& f, double lo, double hi, double xtol,
                                     int max_iter = 300)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (it < max_iter && (hi - lo) > xtol)
    {
        ++it;
        if (fc <= fd)
        {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        }
        else
        {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
    }
    if (fc <= fd)
        return {c, fc, it};
    return {d, fd, it};
}

} // namespace socam::numeric
