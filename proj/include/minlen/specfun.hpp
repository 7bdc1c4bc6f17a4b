#pragma once

// Bessel functions of the second kind, Struve functions and exact
// combinatorics on the positive real axis.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace minlen::specfun {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double kEulerGamma = 0.57721566490153286061;

inline constexpr int kMaxBesselOrder = 64;
inline constexpr int kMaxDerivativeOrder = 32;
inline constexpr int kMaxCombinatoricArg = 64;
inline constexpr double kMaxArgument = 50.0;

/// Y_k(x) for integer k >= 0, x > 0.
///
/// Y_0 and Y_1 come from the ascending series with the logarithmic term,
/// summed in extended precision when x is large enough for the series to
/// cancel; higher orders use the upward recurrence
/// Y_{k+1} = (2k/x) Y_k - Y_{k-1}, which is stable for Y.
///
/// Throws DomainError for x <= 0 or k outside [0, 64], PrecisionError if the
/// recurrence overflows.
double bessel_y(int k, double x);

/// Y_k(x) for any integer k with |k| <= 64, using Y_{-m} = (-1)^m Y_m.
double bessel_y_signed(int k, double x);

/// Y_0(x) ... Y_kmax(x) in one recurrence pass.
std::vector<double> bessel_y_table(int kmax, double x);

/// Struve H_nu(x) for nu in {0, 1} and x in (0, 50], by ascending series.
double struve_h(int nu, double x);

/// k-th derivative of H_0 at x, by term-wise differentiation of the series.
double struve_h0_derivative(int k, double x);

/// d^k Y_0 / dx^k = 2^{-k} sum_{l=0}^{k} (-1)^l C(k,l) Y_{2l-k}(x).
double bessel_y0_derivative(int k, double x);

/// Exact n!, 0 <= n <= 64.
BigInt factorial(int n);

/// Exact C(n, k), 0 <= k <= n <= 64.
BigInt binomial(int n, int k);

}  // namespace minlen::specfun
