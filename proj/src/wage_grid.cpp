#include "marfam/wage_grid.hpp"

#include <cmath>
#include <stdexcept>

#include "marfam/mathutil.hpp"

namespace marfam {

double WageGrid::mean() const {
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += levels[i] * probs[i];
    return s;
}

double WageGrid::mean_log() const {
    double s = 0.0;
    for (int i = 0; i < size(); ++i) s += std::log(levels[i]) * probs[i];
    return s;
}

double WageGrid::sd_log() const {
    const double m = mean_log();
    double s = 0.0;
    for (int i = 0; i < size(); ++i) {
        const double d = std::log(levels[i]) - m;
        s += d * d * probs[i];
    }
    return std::sqrt(s);
}

WageGrid discretize_lognormal(double mu, double sigma, int n) {
    if (sigma <= 0.0) throw std::domain_error("discretize_lognormal: sigma must be > 0");
    if (n < 1) throw std::domain_error("discretize_lognormal: n must be >= 1");
    WageGrid g;
    if (n == 1) {
        g.levels = {std::exp(mu + 0.5 * sigma * sigma)};
        g.probs = {1.0};
        return g;
    }
    g.levels.resize(static_cast<std::size_t>(n));
    g.probs.assign(static_cast<std::size_t>(n), 1.0 / n);
    // E[Z | z_{k} < Z < z_{k+1}] = n (phi(z_k) - phi(z_{k+1})) for the
    // standard normal with equal-mass cut points.
    double phi_lo = 0.0;  // phi(-inf)
    for (int k = 0; k < n; ++k) {
        const double phi_hi = (k == n - 1) ? 0.0 : norm_pdf(norm_inv_cdf((k + 1.0) / n));
        const double cond_mean = n * (phi_lo - phi_hi);
        g.levels[static_cast<std::size_t>(k)] = std::exp(mu + sigma * cond_mean);
        phi_lo = phi_hi;
    }
    return g;
}

}  // namespace marfam
