#include "minlen/specfun.hpp"

#include "minlen/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace minlen::specfun {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

// Above this argument the alternating ascending series lose more digits
// than long double carries, so they are summed in 50-digit arithmetic.
constexpr double kExtendedPrecisionCutoff = 8.0;

void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                          std::to_string(x));
    }
}

template <typename T>
T series_epsilon() {
    return std::numeric_limits<T>::epsilon();
}

// Y_0 and Y_1 from their ascending series.
template <typename T>
std::pair<T, T> y0_y1_series(T x) {
    using std::abs;
    using std::log;
    const T pi = boost::math::constants::pi<T>();
    const T gamma = boost::math::constants::euler<T>();
    const T q = x * x / 4;
    const T log_term = log(x / 2) + gamma;
    const T eps = series_epsilon<T>();

    // J0, the harmonic-weighted Y0 tail, J1 and the digamma-weighted Y1 tail.
    T term0 = 1;   // (-q)^k / (k!)^2
    T term1 = 1;   // (-q)^k / (k! (k+1)!)
    T j0 = 1;
    T y0_tail = 0;
    T j1_sum = 1;
    T harmonic = 0;  // H_k
    // psi(1) + psi(2) = -2 gamma + 1
    T y1_tail = -2 * gamma + 1;
    for (int k = 1; k < 400; ++k) {
        const T kk = k;
        term0 *= -q / (kk * kk);
        term1 *= -q / (kk * (kk + 1));
        harmonic += 1 / kk;
        j0 += term0;
        y0_tail -= harmonic * term0;
        j1_sum += term1;
        y1_tail += (-2 * gamma + 2 * harmonic + 1 / (kk + 1)) * term1;
        if (abs(term0) * (harmonic + 1) < eps * abs(j0) * 1e-2 && kk * kk > q &&
            abs(term1) * (harmonic + 1) < eps * abs(j1_sum) * 1e-2) {
            break;
        }
    }
    const T j1 = x / 2 * j1_sum;
    const T y0 = 2 / pi * (log_term * j0 + y0_tail);
    const T y1 = -2 / (pi * x) + 2 / pi * log(x / 2) * j1 - x / (2 * pi) * y1_tail;
    return {y0, y1};
}

std::pair<long double, long double> y0_y1(double x) {
    if (x <= kExtendedPrecisionCutoff) {
        return y0_y1_series<long double>(static_cast<long double>(x));
    }
    const auto [y0, y1] = y0_y1_series<Wide>(Wide(x));
    return {static_cast<long double>(y0), static_cast<long double>(y1)};
}

std::vector<long double> y_table_ld(int kmax, double x) {
    std::vector<long double> y(static_cast<std::size_t>(kmax) + 1);
    const auto [y0, y1] = y0_y1(x);
    y[0] = y0;
    if (kmax >= 1) {
        y[1] = y1;
    }
    const long double xl = x;
    for (int k = 1; k < kmax; ++k) {
        y[k + 1] = (2.0L * k / xl) * y[k] - y[k - 1];
        if (!std::isfinite(y[k + 1]) ||
            std::abs(y[k + 1]) > static_cast<long double>(std::numeric_limits<double>::max())) {
            throw PrecisionError("bessel_y: upward recurrence overflows at order " +
                                 std::to_string(k + 1) + " for x = " + std::to_string(x));
        }
    }
    return y;
}

template <typename T>
T struve_series(int nu, T x) {
    using std::abs;
    const T pi = boost::math::constants::pi<T>();
    const T h = x / 2;
    const T h2 = h * h;
    const T eps = series_epsilon<T>();
    // nu = 0: (x/2)^{2k+1} / Gamma(k+3/2)^2
    // nu = 1: (x/2)^{2k+2} / (Gamma(k+3/2) Gamma(k+5/2))
    T term = nu == 0 ? 4 * h / pi : 8 * h2 / (3 * pi);
    T sum = term;
    for (int k = 0; k < 400; ++k) {
        const T a = T(k) + T(3) / 2;
        const T b = nu == 0 ? a : a + 1;
        term *= -h2 / (a * b);
        sum += term;
        if (abs(term) < eps * abs(sum) * 1e-2 && a * a > h2) {
            break;
        }
    }
    return sum;
}

template <typename T>
T struve_h0_derivative_series(int k, T x) {
    using std::abs;
    using std::pow;
    const T pi = boost::math::constants::pi<T>();
    const T eps = series_epsilon<T>();
    // H_0(x) = sum_j a_j x^{2j+1}, a_0 = 2/pi, a_{j+1} = -a_j / (4 (j + 3/2)^2)
    T coeff = 2 / pi;
    T sum = 0;
    T largest = 0;
    for (int j = 0; j < 400; ++j) {
        const int power = 2 * j + 1;
        if (power >= k) {
            T falling = 1;
            for (int i = 0; i < k; ++i) {
                falling *= T(power - i);
            }
            const T term = coeff * falling * pow(x, power - k);
            sum += term;
            largest = std::max<T>(largest, abs(term));
            if (abs(term) < eps * largest * 1e-2 && T(j) > x) {
                break;
            }
        }
        const T jj = T(j) + T(3) / 2;
        coeff *= T(-1) / (4 * jj * jj);
    }
    return sum;
}

}  // namespace

std::vector<double> bessel_y_table(int kmax, double x) {
    require_positive(x, "bessel_y");
    if (kmax < 0 || kmax > kMaxBesselOrder) {
        throw DomainError("bessel_y: order must lie in [0, 64], got " + std::to_string(kmax));
    }
    const auto wide = y_table_ld(kmax, x);
    return {wide.begin(), wide.end()};
}

double bessel_y(int k, double x) {
    return bessel_y_table(k, x).back();
}

double bessel_y_signed(int k, double x) {
    const int m = k < 0 ? -k : k;
    const double y = bessel_y(m, x);
    return (k < 0 && (m % 2 != 0)) ? -y : y;
}

double struve_h(int nu, double x) {
    if (nu != 0 && nu != 1) {
        throw UnsupportedError("struve_h: only orders 0 and 1 are provided, got " +
                               std::to_string(nu));
    }
    require_positive(x, "struve_h");
    if (x > kMaxArgument) {
        throw DomainError("struve_h: argument must lie in (0, 50], got " + std::to_string(x));
    }
    if (x <= kExtendedPrecisionCutoff) {
        return static_cast<double>(struve_series<long double>(nu, x));
    }
    return static_cast<double>(struve_series<Wide>(nu, Wide(x)));
}

double struve_h0_derivative(int k, double x) {
    require_positive(x, "struve_h0_derivative");
    if (k < 0 || k > kMaxDerivativeOrder) {
        throw DomainError("struve_h0_derivative: order must lie in [0, 32]");
    }
    if (x > kMaxArgument) {
        throw DomainError("struve_h0_derivative: argument must lie in (0, 50]");
    }
    if (x <= kExtendedPrecisionCutoff) {
        return static_cast<double>(struve_h0_derivative_series<long double>(k, x));
    }
    return static_cast<double>(struve_h0_derivative_series<Wide>(k, Wide(x)));
}

double bessel_y0_derivative(int k, double x) {
    if (k < 0 || k > kMaxDerivativeOrder) {
        throw DomainError("bessel_y0_derivative: order must lie in [0, 32], got " +
                          std::to_string(k));
    }
    require_positive(x, "bessel_y0_derivative");
    const auto y = y_table_ld(k, x);
    long double sum = 0;
    long double c = 1;  // C(k, l)
    for (int l = 0; l <= k; ++l) {
        const int order = 2 * l - k;
        const int m = order < 0 ? -order : order;
        long double ym = y[static_cast<std::size_t>(m)];
        if (order < 0 && (m % 2 != 0)) {
            ym = -ym;
        }
        sum += ((l % 2 == 0) ? c : -c) * ym;
        c = c * (k - l) / (l + 1);
    }
    return static_cast<double>(std::ldexp(sum, -k));
}

BigInt factorial(int n) {
    if (n < 0 || n > kMaxCombinatoricArg) {
        throw DomainError("factorial: argument must lie in [0, 64], got " + std::to_string(n));
    }
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kMaxCombinatoricArg) {
        throw DomainError("binomial: need 0 <= k <= n <= 64, got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace minlen::specfun
