#include "marfam/mathutil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace marfam {

namespace {

// Acklam's coefficients.
constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                         -2.759285104469687e+02, 1.383577518672690e+02,
                         -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                         -1.556989798598866e+02, 6.680131188771972e+01,
                         -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                         -2.400758277161838e+00, -2.549732539343734e+00,
                         4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01,
                         2.445134137142996e+00, 3.754408661907416e+00};

double acklam(double p) {
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
           (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
}

}  // namespace

double norm_inv_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("norm_inv_cdf: p must be in (0,1)");
    }
    double x = acklam(p);
    // One Halley step on F(x) - p = 0.
    const double e = norm_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          int scan_points, double tol) {
    if (!(hi > lo)) {
        return {lo, f(lo)};
    }
    // Coarse scan for a bracket around the best point.
    const int n = std::max(scan_points, 4);
    double best_x = lo, best_v = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = lo + (hi - lo) * k / (n - 1);
        xs[static_cast<std::size_t>(k)] = x;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = lo, b = hi;
    for (int k = 0; k < n; ++k) {
        if (xs[static_cast<std::size_t>(k)] == best_x) {
            a = xs[static_cast<std::size_t>(std::max(0, k - 1))];
            b = xs[static_cast<std::size_t>(std::min(n - 1, k + 1))];
            break;
        }
    }

    // Golden-section on the bracket.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    double x = 0.5 * (a + b);
    double v = f(x);
    if (best_v > v) {
        x = best_x;
        v = best_v;
    }

    // Gradient polish. Central differences at two step sizes with
    // Richardson extrapolation beat the sqrt(eps) plateau of pure
    // value comparisons; secant steps on the extrapolated derivative.
    const double span = hi - lo;
    double h = std::max(1e-4 * span, 1e-9);
    auto grad = [&](double p) {
        const double h2 = 0.5 * h;
        const double d1 = (f(std::min(p + h, hi)) - f(std::max(p - h, lo))) /
                          (std::min(p + h, hi) - std::max(p - h, lo));
        const double d2 = (f(std::min(p + h2, hi)) - f(std::max(p - h2, lo))) /
                          (std::min(p + h2, hi) - std::max(p - h2, lo));
        return (4.0 * d2 - d1) / 3.0;
    };
    double g_prev = 0.0, x_prev = 0.0;
    bool have_prev = false;
    double xc = x;
    for (int it = 0; it < 12; ++it) {
        const double g = grad(xc);
        double step;
        if (have_prev && g != g_prev) {
            step = -g * (xc - x_prev) / (g - g_prev);
        } else {
            step = (g > 0 ? 1.0 : -1.0) * std::min(h, 0.25 * span);
        }
        x_prev = xc;
        g_prev = g;
        have_prev = true;
        double xn = std::clamp(xc + step, lo, hi);
        if (std::abs(xn - xc) < 1e-13 * std::max(1.0, std::abs(xc))) {
            xc = xn;
            break;
        }
        xc = xn;
        h = std::max(std::abs(step) * 0.5, 1e-7 * span);
    }
    const double vc = f(xc);
    if (vc >= v) {
        return {xc, vc};
    }
    return {x, v};
}

double bisect_decreasing(const std::function<double(double)>& g, double lo, double hi,
                         int iters) {
    double a = lo, b = hi;
    for (int it = 0; it < iters; ++it) {
        const double m = 0.5 * (a + b);
        if (g(m) > 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nt = std::min(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace marfam
