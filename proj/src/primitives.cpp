#include "marfam/primitives.hpp"

#include <cmath>
#include <stdexcept>

namespace marfam {

double utility(double c, double l, int n_children, const Preferences& prefs) {
    if (!(c > 0.0)) throw std::domain_error("utility: consumption must be > 0");
    if (!(l > 0.0 && l <= 1.0)) throw std::domain_error("utility: leisure must be in (0,1]");
    const double uc = std::pow(c, 1.0 - prefs.gamma_c) / (1.0 - prefs.gamma_c);
    const double ul =
        prefs.alpha_l * std::pow(l, 1.0 - prefs.gamma_l) / (1.0 - prefs.gamma_l);
    const double un = prefs.alpha_n *
                      (std::pow(1.0 + n_children, 1.0 - prefs.gamma_n) - 1.0) /
                      (1.0 - prefs.gamma_n);
    return uc + ul + un;
}

double bargaining_weight(double w_m, double w_f, int n0, const Bargaining& b) {
    if (!(w_m > 0.0 && w_f > 0.0)) {
        throw std::domain_error("bargaining_weight: wages must be > 0");
    }
    const double x =
        b.rho0 + b.rho1 * (std::log(w_m) - std::log(w_f)) + (n0 > 0 ? b.rho2 : 0.0);
    return 1.0 / (1.0 + std::exp(x));
}

double equivalence_scale(int n0, int n1, const Demography& d) {
    return 1.0 + d.chi0 + d.chi1 * (n0 + n1);
}

double domestic_requirement_single(Gender g, const HomeProduction& hp) {
    return g == Gender::Male ? hp.psi_single_m : hp.psi_single_f;
}

double domestic_requirement_couple(const ChildState& cs, const HomeProduction& hp) {
    return hp.psi0 + (cs.n0 > 0 ? hp.psi1 : 0.0) + (cs.total() > 0 ? hp.psi2 : 0.0);
}

double domestic_aggregate(double d_m, double d_f, const HomeProduction& hp) {
    if (d_m < 0.0 || d_f < 0.0) {
        throw std::domain_error("domestic_aggregate: inputs must be >= 0");
    }
    const double th = hp.theta, xi = hp.xi;
    if (xi == 0.0) {
        // Cobb-Douglas limit; zero input gives zero.
        if (d_m == 0.0 || d_f == 0.0) return 0.0;
        return std::pow(d_m, 1.0 - th) * std::pow(d_f, th);
    }
    if (d_m == 0.0 || d_f == 0.0) {
        if (xi < 0.0) return 0.0;
        return std::pow((1.0 - th) * std::pow(d_m, xi) + th * std::pow(d_f, xi), 1.0 / xi);
    }
    return std::pow((1.0 - th) * std::pow(d_m, xi) + th * std::pow(d_f, xi), 1.0 / xi);
}

double domestic_complement(double d_m, double target, const HomeProduction& hp) {
    const double th = hp.theta, xi = hp.xi;
    if (target <= 0.0) return 0.0;
    if (xi == 0.0) {
        if (d_m <= 0.0) return -1.0;
        return std::pow(target / std::pow(d_m, 1.0 - th), 1.0 / th);
    }
    if (d_m < 0.0 || (xi <= 0.0 && d_m == 0.0)) return -1.0;
    const double rem = std::pow(target, xi) - (1.0 - th) * std::pow(d_m, xi);
    if (rem <= 0.0) {
        // xi > 0: the husband alone meets the requirement.
        return xi > 0.0 && rem == 0.0 ? 0.0 : -1.0;
    }
    return std::pow(rem / th, 1.0 / xi);
}

double theta_from_allocation(double w_m, double w_f, double d_m, double d_f, double xi) {
    if (!(d_m > 0.0 && d_f > 0.0)) {
        throw std::domain_error("theta_from_allocation: domestic inputs must be > 0");
    }
    const double em = w_m * std::pow(d_m, 1.0 - xi);
    const double ef = w_f * std::pow(d_f, 1.0 - xi);
    return ef / (em + ef);
}

}  // namespace marfam
