#include "marfam/params.hpp"

#include <cmath>

namespace marfam {

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw std::domain_error("invalid parameters: " + msg);
}
}  // namespace

void validate(const ModelParams& p) {
    require(p.prefs.gamma_c > 0 && p.prefs.gamma_c != 1.0, "gamma_c must be > 0 and != 1");
    require(p.prefs.gamma_l > 0 && p.prefs.gamma_l != 1.0, "gamma_l must be > 0 and != 1");
    require(p.prefs.gamma_n > 0 && p.prefs.gamma_n != 1.0, "gamma_n must be > 0 and != 1");
    require(p.prefs.alpha_l >= 0, "alpha_l must be >= 0");
    require(p.prefs.alpha_n >= 0, "alpha_n must be >= 0");
    require(std::isfinite(p.barg.rho0) && std::isfinite(p.barg.rho1) &&
                std::isfinite(p.barg.rho2),
            "rho coefficients must be finite");
    require(p.home.theta > 0 && p.home.theta < 1, "theta must be in (0,1)");
    require(p.home.xi < 1, "xi must be < 1");
    require(p.home.psi0 >= 0 && p.home.psi1 >= 0 && p.home.psi2 >= 0,
            "psi requirements must be >= 0");
    require(p.home.psi0 + p.home.psi1 + p.home.psi2 < 1,
            "psi0+psi1+psi2 must be < 1");
    require(p.home.psi_single_m >= 0 && p.home.psi_single_m < 1, "psi_single_m in [0,1)");
    require(p.home.psi_single_f >= 0 && p.home.psi_single_f < 1, "psi_single_f in [0,1)");
    require(p.wages.sigma_wm > 0, "sigma_wm must be > 0");
    require(p.wages.sigma_wf > 0, "sigma_wf must be > 0");
    require(p.bliss.sigma_b > 0, "sigma_b must be > 0");
    require(p.demo.beta > 0 && p.demo.beta < 1, "beta must be in (0,1)");
    require(p.demo.kappa > 0 && p.demo.kappa <= 1, "kappa must be in (0,1]");
    require(p.demo.delta1 >= 0 && p.demo.delta1 <= 1, "delta1 must be in [0,1]");
    require(p.demo.delta2 >= 0 && p.demo.delta2 <= 1, "delta2 must be in [0,1]");
    require(p.n_wage_grid >= 1, "n_wage_grid must be >= 1");
}

}  // namespace marfam
