#include "doctest.h"

#include "oracles.hpp"
#include "socam/errors.hpp"
#include "socam/loads.hpp"

#include <cmath>

using namespace socam;

namespace
{

const PinSpec reference_pin{10.0, 1200.0, 2.0e5};

} // namespace

TEST_CASE("pin model")
{
    const PinModel pin(reference_pin, 2.5);
    CHECK(pin.I() == doctest::Approx(pi * std::pow(2.5, 4) / 4));
    CHECK(pin.beta() == doctest::Approx(4000.0 / (3 * 2e5 * pi)));
    CHECK_THROWS_AS(PinModel(0, 1, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(PinModel(1, 0, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(PinModel(1, 1, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(PinModel(1, 1, 1, 0), DegeneratePin);
}

TEST_CASE("vertical force is constant and linear in torque")
{
    const DesignParams d(50, 0.5, 15.5, 9.5);
    const PinModel pin(reference_pin, 6.5625);
    CHECK(vertical_force(pin, d) == doctest::Approx(150.79644737231007).epsilon(1e-14));
    const PinModel twice(10, 2400, 2e5, 6.5625);
    CHECK(vertical_force(twice, d) == doctest::Approx(2 * vertical_force(pin, d)));
    CHECK(force_state(pin, d, 2.0).f_y == force_state(pin, d, two_pi).f_y);
    CHECK(force_state(pin, d, 4.0).f_y == vertical_force(pin, d));
}

TEST_CASE("horizontal force")
{
    const DesignParams d(50, 0.5, 15.5, 9.5);
    const PinModel pin(reference_pin, 6.5625);
    CHECK_THROWS_AS((void)horizontal_force(pin, d, pi), InfiniteForce);
    // F0 / tan(atan(pi / (pi - 1))) = F0 (pi - 1) / pi.
    CHECK(horizontal_force(pin, d, two_pi) == doctest::Approx(102.79644737231006).epsilon(1e-12));
    // Very far from pi delta approaches pi/2 and f_x vanishes.
    CHECK(std::abs(horizontal_force(pin, d, pi + 1e9)) < 1e-6);

    const auto fs = force_state(pin, d, 5.0);
    CHECK(fs.F == doctest::Approx(std::hypot(fs.f_x, fs.f_y)));
}

TEST_CASE("maximum pin deflection, published rows")
{
    struct Row
    {
        double eta, a4;
        Mechanism m;
        double um;
    };
    const Row rows[] = {{0.38, 9.5, Mechanism::CoaxialConjugate, 8.87},
                        {0.37, 9.0, Mechanism::NonCoaxialTriple, 9.76},
                        {0.5, 15.5, Mechanism::CoaxialConjugate, 0.50}};
    for (const auto& r : rows)
    {
        const DesignParams d(50, r.eta, r.a4, 9.5);
        const PinModel pin(reference_pin, bearing_pin_radius(r.a4));
        const double um = max_pin_deflection(pin, d, r.m) * 1000;
        CHECK(std::abs(um - r.um) <= std::max(0.02 * r.um, 0.02));
    }
}

TEST_CASE("simplified deflection equals the cantilever composition at the interval start")
{
    for (double eta : {0.33, 0.37, 0.45, 0.6})
    {
        const DesignParams d(50, eta, eta * 50 - 9.5, 9.5);
        const PinModel pin(reference_pin, bearing_pin_radius(d.a4()));
        for (auto m : {Mechanism::CoaxialConjugate, Mechanism::NonCoaxialTriple})
        {
            const auto iv = driving_interval(d, m);
            const double composed = pin.beta() / std::pow(pin.a5(), 4) * force_state(pin, d, iv.psi_start).F;
            CHECK(oracle::rel_err(max_pin_deflection(pin, d, m), composed) < 1e-9);
            CHECK(oracle::rel_err(pin_deflection(pin, d, iv.psi_start), composed) < 1e-9);

            // The force magnitude peaks at the interval start.
            const double f0 = force_state(pin, d, iv.psi_start).F;
            for (int i = 1; i <= 200; ++i)
                CHECK(force_state(pin, d, iv.psi_start + iv.length() * i / 200.0).F <= f0 * (1 + 1e-12));
        }
    }
}

TEST_CASE("deflection falls with pin radius")
{
    const DesignParams d(50, 0.4, 10.5, 9.5);
    double prev = std::numeric_limits<double>::infinity();
    for (double a5 = 1.0; a5 < 6.0; a5 += 0.25)
    {
        const double v = max_pin_deflection(PinModel(reference_pin, a5), d, Mechanism::CoaxialConjugate);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("bearing fit")
{
    CHECK(bearing_pin_radius(15.5) == doctest::Approx(6.5625));
    CHECK(bearing_pin_radius(10.0) == doctest::Approx(3.125));
    CHECK_THROWS_AS((void)bearing_pin_radius(5.0), DegeneratePin);
    CHECK_THROWS_AS((void)bearing_pin_radius(2.0), DegeneratePin);
    for (double a4 : {5.5, 9.0, 17.0, 25.0})
        CHECK(bearing_roller_radius(bearing_pin_radius(a4)) == doctest::Approx(a4).epsilon(1e-14));
}
