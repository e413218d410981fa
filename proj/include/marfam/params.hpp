// Model parameters: one struct per block, ModelParams as the single
// source of truth for a solve. Immutable by convention after load.
#pragma once

#include <stdexcept>
#include <string>

namespace marfam {

struct Preferences {
    double gamma_c = 1.582;  // curvature, market goods
    double gamma_l = 1.341;  // curvature, leisure
    double gamma_n = 1.300;  // curvature, children
    double alpha_l = 2.335;  // leisure weight
    double alpha_n = 3.211;  // child weight
};

struct Bargaining {
    double rho0 = -0.267;
    double rho1 = 1.463;  // loading on log wage gap
    double rho2 = 0.782;  // shift when small children present
};

struct HomeProduction {
    double theta = 0.831;  // wife's productivity share
    double xi = -0.029;    // substitution exponent, < 1
    double psi0 = 0.110;   // couple base requirement
    double psi1 = 0.226;   // extra with small children
    double psi2 = 0.052;   // extra with any children
    double psi_single_m = 0.032;
    double psi_single_f = 0.056;
};

struct WageParams {
    double mu_wm = 0.0;
    double sigma_wm = 0.706;
    double mu_wf = -0.139;
    double sigma_wf = 0.771;
};

struct BlissParams {
    double mu_b = -1.603;
    double sigma_b = 1.326;
};

struct Demography {
    double beta = 0.96;    // discount factor
    double kappa = 0.1;    // stage transition probability
    double delta1 = 0.254; // birth success, young parents
    double delta2 = 0.193; // birth success, middle-aged parents
    double chi0 = 0.5;     // equivalence scale intercept
    double chi1 = 0.3;     // equivalence scale slope per child
};

// Numerical knobs; defaults are deliberately tight because the
// proposition round-trips demand near machine-precision allocations.
struct SolverConfig {
    int eta_iters = 60;            // inner bisection iterations
    double dm_tol = 1e-11;         // outer domestic-split tolerance
    int dm_scan = 33;              // outer coarse scan points
    double w_damping = 0.5;        // singles value iteration damping
    double w_tol = 1e-10;
    int w_max_iter = 10000;
    double dist_tol = 1e-13;       // stationary single-distribution tolerance
    int dist_max_iter = 200000;
    double eq_damping = 0.5;       // outer distribution damping
    double eq_tol = 1e-9;
    int eq_max_iter = 20000;
    double married_tol = 1e-12;    // married stationary flow tolerance
    int threads = 1;
};

struct ModelParams {
    Preferences prefs;
    Bargaining barg;
    HomeProduction home;
    WageParams wages;
    BlissParams bliss;
    Demography demo;
    int n_wage_grid = 15;
    SolverConfig solver;
};

// Throws std::domain_error describing the first violated constraint.
void validate(const ModelParams& p);

}  // namespace marfam
