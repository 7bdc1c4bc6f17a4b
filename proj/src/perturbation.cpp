#include "minlen/perturbation.hpp"

#include "minlen/errors.hpp"
#include "minlen/specfun.hpp"

#include <boost/math/constants/constants.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace minlen::perturbation {

namespace {

using specfun::BigInt;
using specfun::BigRational;
using specfun::binomial;
using specfun::factorial;

constexpr int kMaxClosedFullLevel = 8;
constexpr double kMinClosedFullZeta = 1e-6;
constexpr double kMaxClosedFullZeta = 0.5;

// Exact coefficients of the double sum over (i, j) for one level.
struct LevelSums {
    std::vector<BigInt> weights;  // w_i = C(n-1,i) C(n,i) i!
    BigRational prefactor;        // (n-1)! / (n!)^3
    double residual_constant;     // D_n
    double printed_constant;      // (n-1)!/(n!)^3 sum' w w (-1)^m ((m-1)! + (m-2)!)
    double printed_slope;         // (n-1)!/(n!)^3 sum' w w (-1)^m m (m-3)!
    double printed_offset;        // 1/n^2 - 1/n - printed_constant, summed exactly
};

LevelSums make_level_sums(int n) {
    LevelSums s;
    s.weights.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s.weights.push_back(binomial(n - 1, i) * binomial(n, i) * factorial(i));
    }
    const BigInt nf = factorial(n);
    s.prefactor = BigRational(factorial(n - 1), nf * nf * nf);

    BigInt zeroth = nf * nf;  // the (n-1, n-1) term
    BigInt residual = 0;
    BigInt printed = 0;
    BigInt slope = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) {
                continue;
            }
            const int m = 2 * n - i - j;
            const BigInt w = s.weights[static_cast<std::size_t>(i)] *
                             s.weights[static_cast<std::size_t>(j)];
            const int sign = (m % 2 == 0) ? 1 : -1;
            zeroth += sign * w * factorial(m - 1);
            residual -= sign * w * factorial(m - 3);
            printed += sign * w * (factorial(m - 1) + factorial(m - 2));
            slope += sign * w * m * factorial(m - 3);
        }
    }
    // The zeroth order of the sum must reproduce <1/r> = 1/n^2 exactly.
    if (s.prefactor * zeroth != BigRational(1, n * n)) {
        throw PrecisionError("soft-core double sum fails the <1/r> identity at n = " +
                             std::to_string(n));
    }
    s.residual_constant = static_cast<double>(BigRational(2 * n) * s.prefactor * residual);
    s.printed_constant = static_cast<double>(s.prefactor * printed);
    s.printed_slope = static_cast<double>(s.prefactor * slope);
    s.printed_offset = static_cast<double>(BigRational(1, n * n) - BigRational(1, n) -
                                           s.prefactor * printed);
    return s;
}

const LevelSums& level_sums(SLevel level) {
    static const std::vector<LevelSums> table = [] {
        std::vector<LevelSums> t;
        t.reserve(hydrogen::kMaxPrincipal);
        for (int n = 1; n <= hydrogen::kMaxPrincipal; ++n) {
            t.push_back(make_level_sums(n));
        }
        return t;
    }();
    return table[static_cast<std::size_t>(level.n() - 1)];
}

// alpha ln(alpha / n^2), continued to 0 at alpha = 0.
double alpha_log(double alpha, double n) {
    return alpha == 0.0 ? 0.0 : alpha * std::log(alpha / (n * n));
}

// (1/n^3) [(2 beta + beta') / (l + 1/2) - (beta + beta') / n] at l = 0.
double kinetic_group(double n, const DeformationParams& p) {
    constexpr double l_plus_half = 0.5;
    return ((2.0 * p.beta_t() + p.beta_prime_t()) / l_plus_half -
            (p.beta_t() + p.beta_prime_t()) / n) /
           (n * n * n);
}

}  // namespace

DeformationParams::DeformationParams(double beta_t, double beta_prime_t)
    : beta_t_(beta_t), beta_prime_t_(beta_prime_t), alpha_t_(2.0 * beta_t - beta_prime_t) {
    if (!(beta_t >= 0.0) || !(beta_prime_t >= 0.0) || !std::isfinite(beta_t) ||
        !std::isfinite(beta_prime_t)) {
        throw DomainError("deformation parameters must be finite and non-negative");
    }
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * (beta_t + beta_prime_t);
    if (alpha_t_ < 0.0 && -alpha_t_ <= slack) {
        alpha_t_ = 0.0;
    }
    if (alpha_t_ < 0.0) {
        throw DomainError("deformation parameters require 2 beta - beta' >= 0, got " +
                          std::to_string(alpha_t_));
    }
}

double DeformationParams::b_t() const { return std::sqrt(alpha_t_); }

double DeformationParams::zeta(SLevel level) const { return 2.0 * b_t() / level.n(); }

double softcore_closed_full_at(SLevel level, double zeta) {
    const int n = level.n();
    if (n > kMaxClosedFullLevel) {
        throw DomainError("softcore_closed_full: n must not exceed 8, got " + std::to_string(n));
    }
    if (!(zeta >= kMinClosedFullZeta && zeta <= kMaxClosedFullZeta)) {
        throw DomainError("softcore_closed_full: zeta must lie in [1e-6, 0.5], got " +
                          std::to_string(zeta));
    }
    const auto& sums = level_sums(level);
    const double prefactor = static_cast<double>(sums.prefactor);

    // zeta^m d^m [H_0 - Y_0] for m = 2 .. 2n
    std::vector<double> scaled(static_cast<std::size_t>(2 * n) + 1, 0.0);
    for (int m = 2; m <= 2 * n; ++m) {
        const double d = specfun::struve_h0_derivative(m, zeta) -
                         specfun::bessel_y0_derivative(m, zeta);
        scaled[static_cast<std::size_t>(m)] = std::pow(zeta, m) * d;
        if (!std::isfinite(scaled[static_cast<std::size_t>(m)])) {
            throw PrecisionError("softcore_closed_full: derivative of order " +
                                 std::to_string(m) + " is not finite at zeta = " +
                                 std::to_string(zeta));
        }
    }
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double w = static_cast<double>(sums.weights[static_cast<std::size_t>(i)] *
                                                 sums.weights[static_cast<std::size_t>(j)]);
            sum += w * scaled[static_cast<std::size_t>(2 * n - i - j)];
        }
    }
    return boost::math::constants::half_pi<double>() * prefactor * sum;
}

double softcore_closed_full(SLevel level, const DeformationParams& params) {
    return softcore_closed_full_at(level, params.zeta(level));
}

double softcore_residual_constant(SLevel level) { return level_sums(level).residual_constant; }

double softcore_expansion(SLevel level, const DeformationParams& params) {
    const double n = level.n();
    const double alpha = params.alpha_t();
    const double linear = alpha_log(alpha, n) +
                          alpha * (2.0 * kEulerGamma + 1.0 + softcore_residual_constant(level));
    return 1.0 / (n * n) + linear / (n * n * n);
}

CorrectionBreakdown correction_ns(SLevel level, const DeformationParams& params) {
    const double n = level.n();
    const double alpha = params.alpha_t();
    const double n3 = n * n * n;

    CorrectionBreakdown out;
    out.p4_term = 0.5 * params.beta_prime_t() *
                  hydrogen::expectation_closed(level, hydrogen::Observable::p4);
    out.anticommutator_term =
        0.25 * alpha * hydrogen::expectation_closed(level, hydrogen::Observable::anticomm_invr_p2);
    // -[softcore_expansion - 1/n^2], split into its logarithmic and constant parts.
    // The zeroth order 1/n^2 cancels the restored -<1/r> exactly (checked in
    // make_level_sums), so only the alpha-proportional pieces remain.
    out.log_term = -(alpha_log(alpha, n) + alpha * (2.0 * kEulerGamma + 1.0)) / n3;
    out.softcore_term = -alpha * softcore_residual_constant(level) / n3;
    out.total = out.p4_term + out.anticommutator_term + out.softcore_term + out.log_term;
    out.outside_linear_regime = params.zeta(level) >= kLinearRegimeZeta;
    return out;
}

double printed_formula_offset(SLevel level) { return level_sums(level).printed_offset; }

double correction_printed_formula(SLevel level, const DeformationParams& params) {
    const double n = level.n();
    const double n2 = n * n;
    const double n3 = n2 * n;
    const double alpha = params.alpha_t();
    const auto& sums = level_sums(level);
    const double log_part = (alpha_log(alpha, n) + alpha * (2.0 * kEulerGamma + 1.0)) / n3;
    // 1/n^2 - 1/n - prefactor * sum'[(m-1)! + (m-2)!] is carried as one exact constant.
    return kinetic_group(n, params) + sums.printed_offset - log_part -
           sums.printed_slope * alpha / n2;
}

double delta2_ml(const DeformationParams& params) {
    return 0.5 * (params.beta_t() + params.beta_prime_t()) -
           params.alpha_t() * (1.5 - std::log(4.0));
}

double correction_oracle(SLevel level, const DeformationParams& params,
                         const QuadratureOptions& options) {
    using hydrogen::Observable;
    double value = 0.0;
    if (params.beta_prime_t() != 0.0) {
        value += 0.5 * params.beta_prime_t() *
                 hydrogen::expectation_quadrature(level, Observable::p4, options);
    }
    if (params.alpha_t() != 0.0) {
        value += 0.25 * params.alpha_t() *
                 hydrogen::expectation_quadrature(level, Observable::anticomm_invr_p2, options);
        value -= hydrogen::softcore_shift_quadrature(level, params.b_t(), options);
    }
    return value;
}

}  // namespace minlen::perturbation
