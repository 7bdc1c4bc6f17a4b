#pragma once

// First-order shift of hydrogen ns levels produced by the minimal-length
// deformation of the position/momentum algebra. Everything is in Coulomb
// units (energies in e^2/a, lengths in Bohr radii); the deformation enters
// through the dimensionless beta_t = hbar^2 beta / a^2 and
// beta_prime_t = hbar^2 beta' / a^2.
//
// The perturbation is
//   V = (beta'/2) p^4 - [1/sqrt(r^2 + b^2) - 1/r] + (alpha/4) ((1/r) p^2 + p^2 (1/r)),
// with alpha = 2 beta - beta' and b = sqrt(alpha).

#include "minlen/hydrogen.hpp"
#include "minlen/quadrature.hpp"

namespace minlen::perturbation {

using hydrogen::SLevel;

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Largest zeta = 2b/n for which the linear expansion is trusted.
inline constexpr double kLinearRegimeZeta = 1e-2;

class DeformationParams {
public:
    /// Throws DomainError unless beta_t >= 0, beta_prime_t >= 0 and
    /// 2 beta_t - beta_prime_t >= 0. A negative alpha within rounding of
    /// zero (the beta' = 2 beta line) is snapped to 0.
    DeformationParams(double beta_t, double beta_prime_t);

    static DeformationParams zero() { return {0.0, 0.0}; }

    double beta_t() const noexcept { return beta_t_; }
    double beta_prime_t() const noexcept { return beta_prime_t_; }
    double alpha_t() const noexcept { return alpha_t_; }
    /// Soft-core length b / a.
    double b_t() const;
    double zeta(SLevel level) const;

private:
    double beta_t_;
    double beta_prime_t_;
    double alpha_t_;
};

/// Per-term first-order shift of an ns level, in e^2/a.
struct CorrectionBreakdown {
    double p4_term = 0.0;              // (beta'/2) <p^4>
    double anticommutator_term = 0.0;  // (alpha/4) <(1/r)p^2 + p^2(1/r)>
    double softcore_term = 0.0;        // non-logarithmic part of -<1/sqrt(r^2+b^2) - 1/r>
    double log_term = 0.0;             // -(alpha/n^3) (ln(alpha/n^2) + 2 gamma + 1)
    double total = 0.0;
    bool outside_linear_regime = false;  // zeta >= 1e-2
};

/// <1/sqrt(r^2+b^2)> from the full Bessel/Struve double sum at zeta = 2b/n:
///   (pi/2) (n-1)!/(n!)^3 sum_{i,j=0}^{n-1} w_i w_j zeta^m d^m[H_0 - Y_0](zeta),
/// with m = 2n - i - j and w_i = C(n-1,i) C(n,i) i!. Validation only.
/// Requires n <= 8 and 1e-6 <= zeta <= 0.5.
double softcore_closed_full(SLevel level, const DeformationParams& params);
double softcore_closed_full_at(SLevel level, double zeta);

/// Linear-order expansion of <1/sqrt(r^2+b^2)>:
///   1/n^2 + (alpha/n^3) (ln(alpha/n^2) + 2 gamma + 1 + D_n).
///
/// The double sum is expanded with
///   zeta^m d^m Y_0 -> -(2/pi) (-1)^m [(m-1)! - (m-3)! zeta^2 / 2],   m >= 3,
/// i.e. the bracket (m-1)! + [(m-2)! - m (m-3)!] zeta^2/4. The other
/// groupings of that bracket miss the quadrature reference by O(zeta^0) or
/// O(zeta^2) for n >= 2. Struve derivatives are dropped; they contribute
/// -16 b^3 / (3 n^3), beyond linear order.
double softcore_expansion(SLevel level, const DeformationParams& params);

/// D_n = 2n (n-1)!/(n!)^3 sum' w_i w_j (-1)^{m+1} (m-3)!, summed exactly.
/// The primed sum skips (i, j) = (n-1, n-1).
double softcore_residual_constant(SLevel level);

/// First-order shift <ns|V|ns> assembled term by term.
CorrectionBreakdown correction_ns(SLevel level, const DeformationParams& params);

/// The published closed form, transcribed symbol for symbol, including the
/// deformation-independent pair 1/n^2 - 1/n and the bracket
/// (m-1)! + ((m-2)! + m (m-3)! alpha/n^2). Diagnostic only: for n >= 2 it
/// does not vanish at zero deformation.
double correction_printed_formula(SLevel level, const DeformationParams& params);

/// The same formula's value at zero deformation, 1/n^2 - 1/n - (constant sum).
double printed_formula_offset(SLevel level);

/// 8 dE(2s) - dE(1s) = (beta + beta')/2 - (2 beta - beta') (3/2 - ln 4).
double delta2_ml(const DeformationParams& params);

/// <ns|V|ns> from quadrature alone: radial-derivative momentum integrals and
/// the cancellation-free soft-core kernel. Shares no formula with correction_ns.
double correction_oracle(SLevel level, const DeformationParams& params,
                         const QuadratureOptions& options = {});

}  // namespace minlen::perturbation
