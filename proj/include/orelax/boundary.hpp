#pragma once

#include "orelax/config.hpp"
#include "orelax/problem.hpp"
#include "orelax/state.hpp"

namespace orelax {

// The quarter transport step determines interior points i = 1..N from the
// previous state; each domain end is missing one relation per unknown.
// With c > 0 the left end is an inflow for w (impose w from the
// prescribed trace v) and the right end is an outflow (impose a condition
// on the flux error y = z - c w, which travels against w). Closures
// sample the trace at the sub-step midpoint t_sub + dt/8 to keep the
// update time-symmetric.
enum class RightStrategy { exact, dirichlet_y, neumann_y };

struct BoundaryClosure {
    ClosureKind kind = ClosureKind::periodic;
    RightStrategy right = RightStrategy::neumann_y;
    ProblemSetup inflow;  // never consulted by periodic closures

    static BoundaryClosure periodic();
    // requires setup.c > 0 (left end inflow, right end outflow)
    static BoundaryClosure physical(const ProblemSetup& setup,
                                    RightStrategy right);
};

struct EndpointValues {
    double w;
    double z;
};

// Left inflow closure. Imposes (w_old + w_new)/2 = v(-c(t_sub + dt/8))
// and recovers z from the left-moving characteristic
// z_new - lambda*w_new = z_1 - lambda*w_1. Reads only w[0], w[1], z[1]
// of the previous state, never z[0].
EndpointValues close_left(const LatticeState& before, double t_sub,
                          const SchemeConfig& cfg, const ProblemSetup& setup);

// Right closures; all recover z from the right-moving characteristic
// z_new + lambda*w_new = z_N + lambda*w_N.

// (w_old + w_new)/2 = v(1 - c(t_sub + dt/8)), the sampled exact trace.
EndpointValues close_right_exact(const LatticeState& before, double t_sub,
                                 const SchemeConfig& cfg,
                                 const ProblemSetup& setup);

// y = 0 at the sub-step midpoint:
// (z_old + z_new)/2 - c (w_old + w_new)/2 = 0.
EndpointValues close_right_dirichlet_y(const LatticeState& before,
                                       const SchemeConfig& cfg,
                                       const ProblemSetup& setup);

// dx y = 0 at the wall: y_{N+1} = y_N at the new time, with point N given
// by the interior update. Needs N >= 2.
EndpointValues close_right_neumann_y(const LatticeState& before,
                                     const SchemeConfig& cfg,
                                     const ProblemSetup& setup);

}  // namespace orelax
