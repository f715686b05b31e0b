#include "socam/optimizer.hpp"

#include "socam/errors.hpp"
#include "socam/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace socam
{

bool ConstraintStatus::feasible() const noexcept
{
    return g1 <= 0.0 && g2 < 0.0 && g3.has_value() && *g3 < 0.0 && g4 <= 0.0 && g5 < 0.0;
}

bool ConstraintStatus::is_active(int id) const noexcept
{
    return std::find(active.begin(), active.end(), id) != active.end();
}

double alpha5_from_alpha4(double alpha4, double p) noexcept
{
    return 5.0 / 8.0 * alpha4 - 25.0 / (8.0 * p);
}

double cos2_delta(const DesignParams& d, double psi) noexcept
{
    const double c = two_pi * d.eta() - 1.0;
    const double t = psi - pi;
    return c * c / (c * c + t * t);
}

double objective_z(const DesignParams& d, Mechanism m)
{
    const double a5 = bearing_pin_radius(d.a4());
    const double alpha5 = a5 / d.p();
    const DrivingInterval interval = driving_interval(d, m);
    return cos2_delta(d, interval.psi_start) / std::pow(alpha5, 4);
}

ConstraintStatus constraints(const DesignParams& d)
{
    const double p = d.p();
    const double alpha4 = d.a4() / p;
    ConstraintStatus st{};
    st.g1 = inv_pi - d.eta();
    st.g2 = alpha4 - 0.5;
    if (d.eta() >= inv_pi)
        st.g3 = alpha4 - 1.0 / (p * max_pitch_curvature(p, d.eta()));
    // Written as (a4 - (e - b)) / p so that a4 = e - b gives exactly zero.
    st.g4 = (d.a4() - (d.e() - d.b())) / p;
    st.g5 = alpha5_from_alpha4(alpha4, p) - 0.25;

    const std::array<std::optional<double>, 5> g{st.g1, st.g2, st.g3, st.g4, st.g5};
    for (int i = 0; i < 5; ++i)
    {
        if (g[static_cast<std::size_t>(i)] && std::abs(*g[static_cast<std::size_t>(i)]) < activity_tol)
            st.active.push_back(i + 1);
    }
    return st;
}

double max_roller_radius(double p, double b, double eta)
{
    const double by_pitch = p / 2.0 - strict_margin;
    const double by_shaft = eta * p - b;
    const double by_undercut = 1.0 / max_pitch_curvature(p, eta) - strict_margin;
    const double by_pin = bearing_roller_radius(p / 4.0) - strict_margin;
    return std::min({by_pitch, by_shaft, by_undercut, by_pin});
}

namespace
{

constexpr double infinity = std::numeric_limits<double>::infinity();

/// z at the inner optimum a4*(eta), or +inf when no valid pin exists.
double reduced_objective(double p, double b, double eta, Mechanism m)
{
    const double a4 = max_roller_radius(p, b, eta);
    if (!(a4 > bearing_offset))
        return infinity;
    try
    {
        const DesignParams d(p, eta, a4, b);
        if (!constraints(d).feasible())
            return infinity;
        return objective_z(d, m);
    }
    catch (const Error&)
    {
        return infinity;
    }
}

} // namespace

OptimizationResult optimize(double p, double b, EtaBounds bounds, Mechanism m)
{
    if (!(p > 0.0))
        throw InvalidParameter("pitch p must be positive");
    if (!(b >= 0.0))
        throw InvalidParameter("shaft radius b must be non-negative");
    if (!(bounds.lo <= bounds.hi))
        throw InvalidParameter("eta bounds must satisfy lo <= hi");
    if (bounds.lo < inv_pi)
        throw InvalidParameter("eta lower bound must be at least 1/pi (convex pitch curve)");

    const auto f = [&](double eta) { return reduced_objective(p, b, eta, m); };

    const int n = bounds.hi > bounds.lo ? optimizer_grid_points : 1;
    const double step = n > 1 ? (bounds.hi - bounds.lo) / (n - 1) : 0.0;
    const auto grid_eta = [&](int i) { return i == n - 1 ? bounds.hi : bounds.lo + step * i; };

    int best = -1;
    double best_z = infinity;
    for (int i = 0; i < n; ++i)
    {
        const double z = f(grid_eta(i));
        if (z < best_z)
        {
            best_z = z;
            best = i;
        }
    }
    if (best < 0)
        throw Infeasible("no eta in [" + std::to_string(bounds.lo) + ", " +
                         std::to_string(bounds.hi) + "] admits a roller radius above 5 mm");

    double eta_opt = grid_eta(best);
    int iterations = n;
    if (n > 1)
    {
        const double lo = grid_eta(std::max(best - 1, 0));
        const double hi = grid_eta(std::min(best + 1, n - 1));
        const auto refined = numeric::golden_section(f, lo, hi, 1e-12);
        iterations += refined.iterations;
        if (refined.fx <= best_z)
        {
            eta_opt = refined.x;
            best_z = refined.fx;
        }
    }

    const double a4 = max_roller_radius(p, b, eta_opt);
    const DesignParams d(p, eta_opt, a4, b);
    return {eta_opt, a4, bearing_pin_radius(a4), best_z, constraints(d), iterations};
}

namespace
{

std::string violated(const ConstraintStatus& st)
{
    std::string out;
    const auto add = [&out](const char* name) {
        if (!out.empty())
            out += ' ';
        out += name;
    };
    if (!(st.g1 <= 0.0))
        add("g1");
    if (!(st.g2 < 0.0))
        add("g2");
    if (!st.g3 || !(*st.g3 < 0.0))
        add("g3");
    if (!(st.g4 <= 0.0))
        add("g4");
    if (!(st.g5 < 0.0))
        add("g5");
    return out;
}

} // namespace

SweepRow sweep_row(double eta, const SweepOptions& opt)
{
    SweepRow row;
    row.eta = eta;
    try
    {
        if (!(eta > 1.0 / two_pi))
            throw InvalidParameter("eta must exceed 1/(2 pi)");
        row.a4 = max_roller_radius(opt.p, opt.b, eta);
        const DesignParams d(opt.p, eta, row.a4, opt.b);
        const ConstraintStatus st = constraints(d);
        if (!st.feasible())
            throw Infeasible("infeasible design, violates " + violated(st));
        row.a5 = bearing_pin_radius(row.a4);
        const DrivingInterval interval = driving_interval(d, opt.mechanism);
        row.z = cos2_delta(d, interval.psi_start) / std::pow(row.a5 / opt.p, 4);
        row.vL_max = max_pin_deflection(PinModel(opt.pin, row.a5), d, interval);
        row.mu_max = std::abs(pressure_angle(d, interval.psi_start));
        row.mu_min = std::abs(pressure_angle(d, interval.psi_end));
        row.service = service_factor(d, interval, opt.threshold);
    }
    catch (const Error& ex)
    {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row = SweepRow{eta, nan, nan, nan, nan, nan, nan, nan, ex.what()};
    }
    return row;
}

std::vector<SweepRow> sweep(std::span<const double> etas, const SweepOptions& opt)
{
    std::vector<SweepRow> rows(etas.size());
    unsigned workers = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : opt.threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(etas.size(), 1)));

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < etas.size(); ++i)
            rows[i] = sweep_row(etas[i], opt);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < etas.size(); i = next++)
                    rows[i] = sweep_row(etas[i], opt);
            });
        }
    }
    return rows;
}

} // namespace socam
