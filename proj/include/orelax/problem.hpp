#pragma once

#include "orelax/config.hpp"
#include "orelax/state.hpp"

namespace orelax {

enum class ClosureKind { periodic, physical };

// Linear transport test problem on [0,1]: flux f(u) = c*u, Gaussian bump
// initial data and an optional initial flux disequilibrium
// y = z - f(w) != 0. The profile v is a closed form on all of R, so the
// inflow trace v(-c t) needs no extension rule.
//
//   v(xi)  = exp(-A (xi - alpha)^2)         initial w, exact solution
//   y0(x)  = B exp(-A (x - beta)^2)         initial disequilibrium
//
// Defaults are the boundary-study configuration used throughout the
// verification suite.
struct ProblemSetup {
    double c = 1.0;        // transport speed, > 0
    double amp_a = 80.0;   // Gaussian sharpness A, > 0
    double alpha = 0.0;    // initial w-peak center
    double amp_b = 0.0;    // disequilibrium amplitude B
    double beta = 0.0;     // initial y-peak center
    double t_max = 1.0;    // final time, > 0

    double profile(double xi) const;
    double exact_solution(double x, double t) const;  // v(x - c t)
    double initial_y(double x) const;
};

void validate(const ProblemSetup& setup);  // throws std::invalid_argument

// Samples w_i = v(x_i), z_i = c v(x_i) + y0(x_i) on the grid of cfg.
//
// For periodic runs the profile is periodized over the ring circumference
// (N+2)*dx (sum of the nearest images). Raw sampling of a bump centered at
// a domain edge would otherwise put a jump at the array seam and the
// scheme, having no dissipative mechanism, would never converge on it.
LatticeState initial_state(const ProblemSetup& setup, const SchemeConfig& cfg,
                           ClosureKind kind = ClosureKind::physical);

// Exact solution the solver is compared against: v(x - c t) on the
// physical domain, its periodization on the ring.
double reference_solution(const ProblemSetup& setup, ClosureKind kind,
                          std::size_t n_interior, double x, double t);

}  // namespace orelax
