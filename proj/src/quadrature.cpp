#include "minlen/quadrature.hpp"

#include "minlen/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace minlen {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule. Node tables come
// from Boost: abscissa()[0] is the centre (Kronrod only), odd indices are the
// Gauss nodes.
using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;
constexpr std::size_t kPanelEvaluations = 21;

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

// QUADPACK-style estimate: the raw |K - G| is rescaled by (200 |K - G| / resasc)^1.5,
// which keeps smooth panels from being over-refined, and floored at a few ulps of
// the panel's absolute integral.
Panel evaluate_panel(const Integrand& f, double a, double b) {
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 21> fv{};
    fv[0] = f(centre);
    double kronrod = fv[0] * wk[0];
    double gauss = 0.0;
    double resabs = std::abs(kronrod);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double fp = f(centre + half * x[i]);
        const double fm = f(centre - half * x[i]);
        fv[2 * i - 1] = fp;
        fv[2 * i] = fm;
        kronrod += wk[i] * (fp + fm);
        resabs += wk[i] * (std::abs(fp) + std::abs(fm));
        if (i % 2 == 1) {
            gauss += wg[i / 2] * (fp + fm);
        }
    }
    const double mean = 0.5 * kronrod;
    double resasc = wk[0] * std::abs(fv[0] - mean);
    for (std::size_t i = 1; i < x.size(); ++i) {
        resasc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    }
    const double scale = std::abs(half);
    resabs *= scale;
    resasc *= scale;
    double error = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    error = std::max(error, 4.0 * std::numeric_limits<double>::epsilon() * resabs);
    return {a, b, kronrod * half, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options) {
    std::priority_queue<Panel> panels;
    panels.push(evaluate_panel(f, a, b));
    std::size_t evaluations = kPanelEvaluations;
    double total = panels.top().value;
    double error = panels.top().error;

    while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        if (evaluations + 2 * kPanelEvaluations > options.max_evaluations) {
            std::ostringstream msg;
            msg << "quadrature did not converge within " << options.max_evaluations
                << " evaluations; achieved error estimate " << error << " (target "
                << std::max(options.abs_tol, options.rel_tol * std::abs(total)) << ")";
            throw ConvergenceError(msg.str(), error);
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel can no longer be split in double precision.
            std::ostringstream msg;
            msg << "quadrature hit the resolution limit near " << mid
                << "; achieved error estimate " << error;
            throw ConvergenceError(msg.str(), error);
        }
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        evaluations += 2 * kPanelEvaluations;
        panels.push(left);
        panels.push(right);

        // Re-sum from scratch every so often to stop drift from incremental updates.
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        if (panels.size() % 64 == 0) {
            auto copy = panels;
            total = 0.0;
            error = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                error += copy.top().error;
                copy.pop();
            }
        }
    }
    return {total, error, evaluations};
}

QuadratureResult integrate_half_line(const Integrand& f, double scale,
                                     const QuadratureOptions& options) {
    const Integrand mapped = [&f, scale](double t) {
        if (t >= 1.0) {
            return 0.0;
        }
        const double one_minus = 1.0 - t;
        const double r = scale * t / one_minus;
        const double jacobian = scale / (one_minus * one_minus);
        const double value = f(r);
        return value == 0.0 ? 0.0 : value * jacobian;
    };
    return integrate(mapped, 0.0, 1.0, options);
}

}  // namespace minlen
