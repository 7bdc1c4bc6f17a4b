#pragma once

// Undeformed hydrogen s-states in Coulomb units: lengths in Bohr radii,
// energies in e^2/a, momenta in hbar/a.

#include "minlen/quadrature.hpp"

#include <string_view>

namespace minlen::hydrogen {

inline constexpr int kMaxPrincipal = 20;

/// An s-level (l = 0) with principal quantum number 1 <= n <= 20.
class SLevel {
public:
    explicit SLevel(int n);

    int n() const noexcept { return n_; }

    friend bool operator==(SLevel, SLevel) = default;

private:
    int n_;
};

enum class Observable {
    inv_r,             // <1/r>
    inv_r2,            // <1/r^2>
    p2,                // <p^2>
    p4,                // <p^4>
    anticomm_invr_p2,  // <(1/r) p^2 + p^2 (1/r)>
    energy,            // E_n
};

/// Parses the snake_case observable name; throws UnsupportedError otherwise.
Observable parse_observable(std::string_view name);
std::string_view observable_name(Observable o);

/// R_{n0}(r), normalized so that the integral of R^2 r^2 over [0, inf) is 1.
double radial_wavefunction(SLevel level, double r);

struct RadialDerivatives {
    double value;
    double first;
    double second;
};

/// R, dR/dr and d^2R/dr^2 from the exact polynomial times exponential form.
RadialDerivatives radial_derivatives(SLevel level, double r);

/// <1/r^2> = 1 / (n^3 (l + 1/2)); l enters only through this factor.
double inverse_square_radius(SLevel level, int l = 0);

/// Closed-form expectation values in the state |n s>.
///
/// <p^4> and the anticommutator follow from p^2 psi = 2 (E + 1/r) psi:
///   <p^4> = 4 (E^2 + 2 E <1/r> + <1/r^2>),
///   <(1/r) p^2 + p^2 (1/r)> = 4 (E <1/r> + <1/r^2>).
double expectation_closed(SLevel level, Observable observable);

/// Integral of R_{n0}^2 kernel(r) r^2 over [0, inf).
double quadrature_radial(SLevel level, const Integrand& kernel,
                         const QuadratureOptions& options = {});

/// Brute-force counterpart of expectation_closed.
///
/// Momentum observables use the analytic radial derivatives, not the
/// eigenvalue equation: <p^2> = int R'^2 r^2, <p^4> = int (lap R)^2 r^2 and
/// the anticommutator is -2 int (R/r) lap R r^2, with lap R = R'' + 2R'/r.
double expectation_quadrature(SLevel level, Observable observable,
                              const QuadratureOptions& options = {});

/// <1/sqrt(r^2 + b^2)> by quadrature; b in Bohr radii, b >= 0.
double softcore_quadrature(SLevel level, double b, const QuadratureOptions& options = {});

/// <1/sqrt(r^2 + b^2) - 1/r> by quadrature of the cancellation-free kernel
/// -b^2 / (r s (r + s)), s = sqrt(r^2 + b^2).
double softcore_shift_quadrature(SLevel level, double b,
                                 const QuadratureOptions& options = {});

}  // namespace minlen::hydrogen
