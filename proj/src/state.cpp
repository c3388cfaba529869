#include "orelax/state.hpp"

#include <cmath>
#include <stdexcept>

namespace orelax {

bool LatticeState::all_finite() const {
    for (double v : w) {
        if (!std::isfinite(v)) return false;
    }
    for (double v : z) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

LatticeState make_state(std::size_t n_interior) {
    if (n_interior < 2) {
        throw std::invalid_argument("lattice needs at least 2 interior points");
    }
    LatticeState s;
    s.w.assign(n_interior + 2, 0.0);
    s.z.assign(n_interior + 2, 0.0);
    return s;
}

void require_valid(const LatticeState& s) {
    if (s.w.size() != s.z.size()) {
        throw std::invalid_argument("lattice arrays w and z differ in length");
    }
    if (s.w.size() < 4) {
        throw std::invalid_argument("lattice needs at least 2 interior points");
    }
}

}  // namespace orelax
