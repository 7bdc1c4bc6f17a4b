#include "minlen/hydrogen.hpp"

#include "minlen/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace minlen::hydrogen {

namespace {

constexpr std::array<std::string_view, 6> kObservableNames = {
    "inv_r", "inv_r2", "p2", "p4", "anticomm_invr_p2", "energy"};

// Generalized Laguerre L^a_k(x) by the three-term recurrence.
double laguerre(int k, int a, double x) {
    if (k < 0) {
        return 0.0;
    }
    double prev = 1.0;
    if (k == 0) {
        return prev;
    }
    double cur = 1.0 + a - x;
    for (int j = 1; j < k; ++j) {
        const double next = ((2.0 * j + 1.0 + a - x) * cur - (j + a) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

void require_radius(double r) {
    if (!(r >= 0.0)) {
        throw DomainError("radial_wavefunction: radius must be non-negative, got " +
                          std::to_string(r));
    }
}

}  // namespace

SLevel::SLevel(int n) : n_(n) {
    if (n < 1 || n > kMaxPrincipal) {
        throw DomainError("principal quantum number must lie in [1, 20], got " +
                          std::to_string(n));
    }
}

Observable parse_observable(std::string_view name) {
    for (std::size_t i = 0; i < kObservableNames.size(); ++i) {
        if (kObservableNames[i] == name) {
            return static_cast<Observable>(i);
        }
    }
    throw UnsupportedError("unsupported observable '" + std::string(name) + "'");
}

std::string_view observable_name(Observable o) {
    return kObservableNames.at(static_cast<std::size_t>(o));
}

RadialDerivatives radial_derivatives(SLevel level, double r) {
    require_radius(r);
    // R = N e^{-r/n} L^1_{n-1}(2r/n), N = 2 / n^{5/2};
    // d/dx L^a_k = -L^{a+1}_{k-1}.
    const int n = level.n();
    const double k = 1.0 / n;
    const double x = 2.0 * r / n;
    const double p0 = laguerre(n - 1, 1, x);
    const double p1 = -2.0 * k * laguerre(n - 2, 2, x);
    const double p2 = 4.0 * k * k * laguerre(n - 3, 3, x);
    const double e = 2.0 / std::pow(static_cast<double>(n), 2.5) * std::exp(-k * r);
    return {e * p0, e * (p1 - k * p0), e * (p2 - 2.0 * k * p1 + k * k * p0)};
}

double radial_wavefunction(SLevel level, double r) {
    return radial_derivatives(level, r).value;
}

double inverse_square_radius(SLevel level, int l) {
    if (l < 0) {
        throw DomainError("angular momentum must be non-negative");
    }
    const double n = level.n();
    return 1.0 / (n * n * n * (l + 0.5));
}

double expectation_closed(SLevel level, Observable observable) {
    const double n = level.n();
    const double energy = -0.5 / (n * n);
    const double inv_r = 1.0 / (n * n);
    const double inv_r2 = inverse_square_radius(level);
    switch (observable) {
        case Observable::inv_r:
            return inv_r;
        case Observable::inv_r2:
            return inv_r2;
        case Observable::p2:
            return 1.0 / (n * n);
        case Observable::p4:
            return 4.0 * (energy * energy + 2.0 * energy * inv_r + inv_r2);
        case Observable::anticomm_invr_p2:
            return 4.0 * (energy * inv_r + inv_r2);
        case Observable::energy:
            return energy;
    }
    throw UnsupportedError("unsupported observable");
}

double quadrature_radial(SLevel level, const Integrand& kernel,
                         const QuadratureOptions& options) {
    const Integrand density = [level, &kernel](double r) {
        const double psi = radial_wavefunction(level, r);
        if (psi == 0.0) {
            return 0.0;
        }
        return psi * psi * kernel(r) * r * r;
    };
    return integrate_half_line(density, level.n(), options).value;
}

double expectation_quadrature(SLevel level, Observable observable,
                              const QuadratureOptions& options) {
    const double n = level.n();
    switch (observable) {
        case Observable::inv_r:
            return quadrature_radial(level, [](double r) { return 1.0 / r; }, options);
        case Observable::inv_r2:
            return quadrature_radial(level, [](double r) { return 1.0 / (r * r); }, options);
        case Observable::p2:
            return integrate_half_line(
                       [level](double r) {
                           const auto d = radial_derivatives(level, r);
                           return d.first * d.first * r * r;
                       },
                       n, options)
                .value;
        case Observable::p4:
            return integrate_half_line(
                       [level](double r) {
                           const auto d = radial_derivatives(level, r);
                           if (d.value == 0.0) {
                               return 0.0;
                           }
                           const double lap_r = d.second * r + 2.0 * d.first;  // r * lap R
                           return lap_r * lap_r;
                       },
                       n, options)
                .value;
        case Observable::anticomm_invr_p2:
            return integrate_half_line(
                       [level](double r) {
                           const auto d = radial_derivatives(level, r);
                           if (d.value == 0.0) {
                               return 0.0;
                           }
                           return -2.0 * d.value * (d.second * r + 2.0 * d.first);
                       },
                       n, options)
                .value;
        case Observable::energy:
            return 0.5 * expectation_quadrature(level, Observable::p2, options) -
                   expectation_quadrature(level, Observable::inv_r, options);
    }
    throw UnsupportedError("unsupported observable");
}

double softcore_quadrature(SLevel level, double b, const QuadratureOptions& options) {
    if (!(b >= 0.0)) {
        throw DomainError("softcore_quadrature: b must be non-negative");
    }
    return quadrature_radial(level, [b](double r) { return 1.0 / std::hypot(r, b); }, options);
}

double softcore_shift_quadrature(SLevel level, double b, const QuadratureOptions& options) {
    if (!(b >= 0.0)) {
        throw DomainError("softcore_shift_quadrature: b must be non-negative");
    }
    if (b == 0.0) {
        return 0.0;
    }
    const double b2 = b * b;
    return quadrature_radial(
        level,
        [b, b2](double r) {
            const double s = std::hypot(r, b);
            return -b2 / (r * s * (r + s));
        },
        options);
}

}  // namespace minlen::hydrogen
