#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orelax {

// Kinetic lattice state: the conserved variable w and the flux variable z
// on the grid x_i = i*dx, i = 0 .. N+1 (N interior points, two boundary
// cells). The clock advances in quarter steps: sub_time = quarter_ticks *
// (dt/4), recomputed from the tick count on every advance so it never
// drifts.
struct LatticeState {
    std::vector<double> w;
    std::vector<double> z;
    std::int64_t quarter_ticks = 0;
    double sub_time = 0.0;

    std::size_t points() const { return w.size(); }
    std::size_t n_interior() const { return w.size() - 2; }
    bool all_finite() const;
};

// Zero-initialized state with N interior points. N >= 2 is required (the
// widest boundary stencil reads index N-1).
LatticeState make_state(std::size_t n_interior);

// Throws std::invalid_argument on mismatched array lengths or N < 2.
void require_valid(const LatticeState& s);

}  // namespace orelax
