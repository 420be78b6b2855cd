#include "qstep/model.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using qstep::Complex;
using qstep::Regime;
using qstep::StepPotential;

TEST_CASE("potential shape") {
    const StepPotential p{1.0, 0.5};
    CHECK(qstep::potential_value(p, 0.0) == 0.5);
    // saturates to 0 / v0 a few widths out
    CHECK(qstep::potential_value(p, -40.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(qstep::potential_value(p, 40.0) == doctest::Approx(1.0).epsilon(1e-15));

    SUBCASE("point symmetry about the midpoint") {
        for (double x : {0.1, 0.7, 1.9, 5.0}) {
            CHECK(std::abs(qstep::potential_value(p, x) +
                           qstep::potential_value(p, -x) - p.v0) < 1e-15);
        }
    }

    SUBCASE("monotone rise") {
        double prev = qstep::potential_value(p, -6.0);
        for (double x = -5.75; x <= 6.0; x += 0.25) {
            const double v = qstep::potential_value(p, x);
            CHECK(v > prev);
            prev = v;
        }
    }

    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(qstep::potential_value({0.0, 1.0}, 0.0),
                        qstep::DegenerateInputError);
        CHECK_THROWS_AS(qstep::potential_value({1.0, -2.0}, 0.0),
                        qstep::DegenerateInputError);
        CHECK_THROWS_AS(qstep::potential_value({std::nan(""), 1.0}, 0.0),
                        qstep::DegenerateInputError);
    }
}

TEST_CASE("kinematics in both regimes") {
    const StepPotential p{1.0, 0.5};

    SUBCASE("above") {
        const auto kin = qstep::kinematics(p, 2.0);
        CHECK(kin.regime == Regime::Above);
        CHECK(kin.k == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(kin.ell == 1.0);
        CHECK(kin.mu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(kin.nu == 1.0);
        CHECK(kin.kappa == 0.0);
    }

    SUBCASE("below") {
        const auto kin = qstep::kinematics(p, 0.5);
        CHECK(kin.regime == Regime::Below);
        CHECK(kin.kappa == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
        CHECK(kin.ell == 0.0);
        CHECK(kin.nu == 0.0);
    }

    SUBCASE("threshold energy counts as above with nu = 0") {
        const auto kin = qstep::kinematics(p, 1.0);
        CHECK(kin.regime == Regime::Above);
        CHECK(kin.ell == 0.0);
        CHECK(kin.nu == 0.0);
        CHECK(kin.kappa == 0.0);
    }

    SUBCASE("invalid energies") {
        CHECK_THROWS_AS(qstep::kinematics(p, 0.0), qstep::NonPositiveEnergyError);
        CHECK_THROWS_AS(qstep::kinematics(p, -1.0),
                        qstep::NonPositiveEnergyError);
        CHECK_THROWS_AS(qstep::kinematics(p, std::nan("")), qstep::DomainError);
    }
}

TEST_CASE("hypergeometric mapping invariants") {
    // c = 1 + 2 alpha, a + b = 2 + 2 alpha, a b = 1 + 2 alpha + v0/(2 delta)^2
    // characterize the substitution regardless of regime
    std::mt19937 rng(71u);
    std::uniform_real_distribution<double> delta_draw(0.1, 20.0);
    std::uniform_real_distribution<double> ratio_draw(0.02, 6.0);
    for (int i = 0; i < 50; ++i) {
        const StepPotential p{1.0, delta_draw(rng)};
        const double energy = ratio_draw(rng);
        const auto kin = qstep::kinematics(p, energy);
        const auto m = qstep::hyp_mapping(kin, p);
        CAPTURE(p.delta);
        CAPTURE(energy);
        CHECK(std::abs(m.c - (1.0 + 2.0 * m.alpha)) < 1e-12);
        CHECK(std::abs(m.a + m.b - (2.0 + 2.0 * m.alpha)) < 1e-12);
        const Complex product_target =
            1.0 + 2.0 * m.alpha + p.v0 / (4.0 * p.delta * p.delta);
        CHECK(std::abs(m.a * m.b - product_target) <
              1e-12 * std::max(1.0, std::abs(product_target)));
        CHECK(m.beta == 1.0);
        if (kin.regime == Regime::Above) {
            CHECK(m.alpha.real() == 0.0);
            CHECK(m.alpha.imag() == doctest::Approx(-kin.nu).epsilon(1e-15));
        } else {
            CHECK(m.alpha.imag() == 0.0);
            CHECK(m.alpha.real() ==
                  doctest::Approx(kin.kappa / (2.0 * p.delta)).epsilon(1e-14));
        }
    }
}
