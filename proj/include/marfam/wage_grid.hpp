// Equiprobable discretization of the lognormal wage law.
#pragma once

#include <vector>

namespace marfam {

struct WageGrid {
    std::vector<double> levels;  // strictly increasing, positive
    std::vector<double> probs;   // nonnegative, sum to 1

    int size() const { return static_cast<int>(levels.size()); }
    double mean() const;
    double mean_log() const;
    double sd_log() const;
};

// n equal-mass bins of log w ~ N(mu, sigma); level is exp of the
// conditional mean of log-wage within each bin. n = 1 degenerates to
// the unconditional lognormal mean.
WageGrid discretize_lognormal(double mu, double sigma, int n);

}  // namespace marfam
