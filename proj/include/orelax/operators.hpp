#pragma once

#include "orelax/boundary.hpp"
#include "orelax/config.hpp"
#include "orelax/flux.hpp"
#include "orelax/state.hpp"

// Split evolution operators. All are pure state-to-state transforms; a
// simulation chains them sequentially, independent simulations can run
// concurrently without coordination. The operator application order
// inside a step is fixed, so runs are bit-reproducible.

namespace orelax {

// One quarter transport step T(dt/4): the characteristic variables
// z +- lambda*w shift by exactly one cell; equivalently, for interior i,
//   w' = (w[i-1]+w[i+1])/2 + (z[i-1]-z[i+1])/(2 lambda)
//   z' = (z[i-1]+z[i+1])/2 + lambda (w[i-1]-w[i+1])/2.
// Endpoints come from the closure; the clock advances by dt/4.
LatticeState transport_quarter(const LatticeState& s, const SchemeConfig& cfg,
                               const BoundaryClosure& closure);

// z -> 2 f(w) - z at every point including the boundary cells; w and the
// clock are untouched. Involutive: applying it twice recovers the state
// up to one rounding of the subtraction.
LatticeState relax_instant(const LatticeState& s, const FluxModel& flux);

// z -> f(w) + k (z - f(w)) with k = (2 epsilon - dt)/(2 epsilon + dt).
// epsilon = 0 reduces exactly to relax_instant. Rejects epsilon < 0.
LatticeState relax_over(const LatticeState& s, const FluxModel& flux,
                        double epsilon, double dt);

// z -> f(w) + exp(-dt/epsilon) (z - f(w)). Rejects epsilon <= 0; dt = 0
// is the identity.
LatticeState relax_exact(const LatticeState& s, const FluxModel& flux,
                         double epsilon, double dt);

// z -> f(w); idempotent.
LatticeState relax_project(const LatticeState& s, const FluxModel& flux);

// Palindromic step  T(dt/4) R T(dt/4) T(dt/4) R T(dt/4)  where R is the
// instant relaxation, or the over-relaxation with time argument dt/2 per
// occurrence when cfg.relaxation == over. Advances the clock by dt.
LatticeState step_s2(const LatticeState& s, const SchemeConfig& cfg,
                     const FluxModel& flux, const BoundaryClosure& closure);

// Lie step: four quarter transports, then one relaxation (exact with
// epsilon > 0, or the projection).
LatticeState step_s1(const LatticeState& s, const SchemeConfig& cfg,
                     const FluxModel& flux, const BoundaryClosure& closure);

// Dispatch on cfg.scheme.
LatticeState step(const LatticeState& s, const SchemeConfig& cfg,
                  const FluxModel& flux, const BoundaryClosure& closure);

// Max-norm of (S2 applied forward, then its exact algebraic inverse)(s) - s
// on the periodic lattice. The inverse reverses the operator order and the
// shift directions; the instant relaxation is its own inverse. Requires
// scheme == s2 and relaxation == instant.
double reversibility_defect(const LatticeState& s, const SchemeConfig& cfg,
                            const FluxModel& flux);

}  // namespace orelax
