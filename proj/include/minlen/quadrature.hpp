#pragma once

#include <cstddef>
#include <functional>

namespace minlen {

struct QuadratureOptions {
    double abs_tol = 1e-14;
    double rel_tol = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|). Throws ConvergenceError
/// (carrying the achieved error) when the evaluation budget runs out.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral of f over [0, inf) after the substitution r = scale * t / (1 - t).
QuadratureResult integrate_half_line(const Integrand& f, double scale,
                                     const QuadratureOptions& options = {});

}  // namespace minlen
