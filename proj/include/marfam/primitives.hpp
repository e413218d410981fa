// Primitive functions of the household model: period utility, the
// wife's bargaining weight, the equivalence scale, domestic labor
// requirements and the CES aggregator of spouses' domestic hours.
#pragma once

#include "marfam/child_state.hpp"
#include "marfam/params.hpp"

namespace marfam {

// u(c, l, N). Requires c > 0 and 0 < l <= 1.
double utility(double c, double l, int n_children, const Preferences& prefs);

// Wife's Pareto weight, logistic in the log wage gap and the presence
// of small children. Requires positive wages.
double bargaining_weight(double w_m, double w_f, int n0, const Bargaining& b);

// Gamma(N0, N1) = 1 + chi0 + chi1 (N0 + N1).
double equivalence_scale(int n0, int n1, const Demography& d);

// Required effective domestic labor for the household.
double domestic_requirement_single(Gender g, const HomeProduction& hp);
double domestic_requirement_couple(const ChildState& cs, const HomeProduction& hp);

// CES aggregate of spouses' domestic hours. A zero input with xi <= 0
// yields 0 (complement limit); xi = 0 is the Cobb-Douglas limit.
double domestic_aggregate(double d_m, double d_f, const HomeProduction& hp);

// Wife's hours d_f solving D(d_m, d_f) = target, or -1 if no positive
// solution exists at this d_m.
double domestic_complement(double d_m, double target, const HomeProduction& hp);

// Productivity share recovered from an interior cost-minimizing split.
double theta_from_allocation(double w_m, double w_f, double d_m, double d_f, double xi);

}  // namespace marfam
