// Small numerical helpers shared across the engine.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace marfam {

inline constexpr double kPi = 3.14159265358979323846;

inline double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Inverse standard normal CDF: Acklam's rational approximation refined
// with one Halley step, good to ~1e-15 over (0,1).
double norm_inv_cdf(double p);

// E[z * 1{z > t}] for z ~ N(mu, sigma).
inline double norm_upper_partial_mean(double mu, double sigma, double t) {
    const double z = (t - mu) / sigma;
    return mu * (1.0 - norm_cdf(z)) + sigma * norm_pdf(z);
}

// Maximizes a unimodal f on [lo, hi] by coarse scan + golden-section +
// a finite-difference polish (Richardson-extrapolated central gradient).
// The polish pushes the argmax to ~1e-11 even though function values
// resolve it only to ~sqrt(eps).
struct ScalarMax {
    double x = 0.0;
    double value = 0.0;
};
ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          int scan_points, double tol);

// Root of a strictly decreasing continuous g on (0, inf) by bracketed
// bisection; g(lo) > 0 is the caller's responsibility.
double bisect_decreasing(const std::function<double(double)>& g, double lo, double hi,
                         int iters);

// Deterministic static-partition parallel loop; fn(i) must write only
// slot i state. Thread count <= 1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

inline int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace marfam
