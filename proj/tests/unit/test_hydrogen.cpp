#include "minlen/errors.hpp"
#include "minlen/hydrogen.hpp"
#include "minlen/perturbation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace minlen;
using namespace minlen::hydrogen;
using oracle::rel_err;

namespace {
constexpr double kGamma = perturbation::kEulerGamma;
}

TEST_CASE("radial wavefunction at the origin") {
    CHECK(radial_wavefunction(SLevel(1), 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(radial_wavefunction(SLevel(2), 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n) {
        CHECK(radial_wavefunction(SLevel(n), 0.0) ==
              doctest::Approx(2.0 / std::pow(n, 1.5)).epsilon(1e-14));
    }
    // R_20 = (1/sqrt 2)(1 - r/2) e^{-r/2}
    for (double r : {0.3, 2.0, 7.5}) {
        CHECK(radial_wavefunction(SLevel(2), r) ==
              doctest::Approx((1.0 - r / 2.0) * std::exp(-r / 2.0) / std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("radial derivatives satisfy the radial Schrodinger equation") {
    // R'' + (2/r) R' = -2 (E + 1/r) R
    for (int n : {1, 3, 7, 20}) {
        const SLevel level(n);
        const double e = -0.5 / (n * n);
        for (double r : {0.05, 0.7, 3.0, 11.0}) {
            const auto d = radial_derivatives(level, r);
            const double lhs = d.second + 2.0 * d.first / r;
            const double rhs = -2.0 * (e + 1.0 / r) * d.value;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)) / std::pow(n, 1.5));
        }
    }
}

TEST_CASE("normalization by quadrature") {
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(std::abs(quadrature_radial(SLevel(n), [](double) { return 1.0; }) - 1.0) < 1e-12);
    }
}

TEST_CASE("quadrature reproduces simple matrix elements") {
    CHECK(quadrature_radial(SLevel(1), [](double r) { return 1.0 / r; }) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(quadrature_radial(SLevel(2), [](double r) { return 1.0 / (r * r); }) ==
          doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("closed-form expectations") {
    CHECK(expectation_closed(SLevel(1), Observable::inv_r) == 1.0);
    CHECK(expectation_closed(SLevel(1), Observable::p4) == doctest::Approx(5.0).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n) {
        const SLevel level(n);
        const double nn = n;
        CHECK(expectation_closed(level, Observable::energy) == -0.5 / (nn * nn));
        CHECK(expectation_closed(level, Observable::inv_r2) ==
              doctest::Approx(2.0 / (nn * nn * nn)).epsilon(1e-15));
        CHECK(expectation_closed(level, Observable::p4) ==
              doctest::Approx(8.0 / (nn * nn * nn) - 3.0 / (nn * nn * nn * nn)).epsilon(1e-14));
        CHECK(expectation_closed(level, Observable::anticomm_invr_p2) ==
              doctest::Approx(8.0 / (nn * nn * nn) - 2.0 / (nn * nn * nn * nn)).epsilon(1e-14));
    }
    CHECK(inverse_square_radius(SLevel(2), 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK_THROWS_AS(inverse_square_radius(SLevel(2), -1), DomainError);
}

TEST_CASE("closed forms agree with the quadrature oracle for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        const SLevel level(n);
        for (auto o : {Observable::inv_r, Observable::inv_r2, Observable::p2, Observable::p4,
                       Observable::anticomm_invr_p2, Observable::energy}) {
            CAPTURE(n);
            CAPTURE(observable_name(o));
            CHECK(rel_err(expectation_quadrature(level, o), expectation_closed(level, o)) < 1e-10);
        }
    }
}

TEST_CASE("virial theorem <p^2>/2 = -E") {
    for (int n = 1; n <= 10; ++n) {
        const SLevel level(n);
        CHECK(std::abs(0.5 * expectation_quadrature(level, Observable::p2) +
                       expectation_closed(level, Observable::energy)) < 1e-12);
    }
}

TEST_CASE("observable names round-trip") {
    for (auto o : {Observable::inv_r, Observable::inv_r2, Observable::p2, Observable::p4,
                   Observable::anticomm_invr_p2, Observable::energy}) {
        CHECK(parse_observable(observable_name(o)) == o);
    }
    CHECK_THROWS_AS(parse_observable("p6"), UnsupportedError);
}

TEST_CASE("soft-core quadrature limits") {
    CHECK(softcore_quadrature(SLevel(1), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(softcore_quadrature(SLevel(2), 0.0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(softcore_shift_quadrature(SLevel(3), 0.0) == 0.0);
    CHECK_THROWS_AS(softcore_quadrature(SLevel(1), -0.1), DomainError);
}

TEST_CASE("soft-core quadrature at b = 0.01 for 1s") {
    const double b = 0.01;
    const double s = softcore_quadrature(SLevel(1), b);
    CHECK(s < 1.0);
    // Both routes agree: direct kernel vs cancellation-free shift kernel.
    CHECK(std::abs(s - 1.0 - softcore_shift_quadrature(SLevel(1), b)) < 1e-14);
    // Beyond 1 + 2b^2 (ln b + gamma + 1/2), the Struve part of the exact
    // Bessel/Struve representation contributes (pi/2) zeta^2 d^2 H_0 ~ -(2/3) zeta^3
    // with zeta = 2b, i.e. -16 b^3 / 3; what remains is O(b^4 ln b).
    const double linear = 1.0 + 2.0 * b * b * (std::log(b) + kGamma + 0.5);
    const double cubic = -16.0 * b * b * b / 3.0;
    CHECK(std::abs(s - linear) > 1e-6);
    CHECK(std::abs(s - linear - cubic) < 5.0 * std::pow(b, 4) * std::abs(std::log(b)));
}

TEST_CASE("soft-core quadrature decreases in b and tends to <1/r>") {
    for (int n : {1, 2, 5}) {
        const SLevel level(n);
        const double inv_r = 1.0 / (n * n);
        double previous = softcore_quadrature(level, 1e-2);
        for (double b : {1e-3, 1e-4}) {
            const double s = softcore_quadrature(level, b);
            CHECK(s > previous);
            CHECK(s < inv_r);
            CHECK(inv_r - s < inv_r - previous);
            previous = s;
        }
        CHECK(inv_r - previous < 1e-6);
    }
}

TEST_CASE("quadrature convergence failure reports the achieved error") {
    QuadratureOptions opts;
    opts.max_evaluations = 5000;
    try {
        quadrature_radial(SLevel(1), [](double r) { return 1.0 / (r * r * r); }, opts);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved_error() > 0.0);
    }
}

TEST_CASE("level guard") {
    CHECK_THROWS_AS(SLevel(0), DomainError);
    CHECK_THROWS_AS(SLevel(21), DomainError);
    CHECK_THROWS_AS(radial_wavefunction(SLevel(1), -1.0), DomainError);
}
