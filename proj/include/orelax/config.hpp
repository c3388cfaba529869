#pragma once

#include <cstddef>
#include <string>

namespace orelax {

enum class Scheme { s1, s2 };

// Relaxation variants:
//   instant  z -> 2 f(w) - z          (involution, its own inverse)
//   over     z -> f(w) + k (z - f(w)), k = (2e - dt)/(2e + dt)
//   exact    z -> f(w) + exp(-dt/e) (z - f(w))
//   project  z -> f(w)               (idempotent)
enum class Relaxation { instant, over, exact, project };

// The time step is locked to dt = 4*dx/lambda so that one quarter of a
// transport step shifts the characteristic variables z +- lambda*w by
// exactly one grid cell.
struct SchemeConfig {
    double lambda = 2.0;
    double dx = 0.0;
    double dt = 0.0;
    double epsilon = 0.0;
    Scheme scheme = Scheme::s2;
    Relaxation relaxation = Relaxation::instant;
    std::size_t n_interior = 0;

    static SchemeConfig make(std::size_t n_interior, double lambda,
                             Scheme scheme = Scheme::s2,
                             Relaxation relaxation = Relaxation::instant,
                             double epsilon = 0.0);

    // Grid with dx = 2^-dx_exponent, i.e. N = 2^dx_exponent - 1.
    static SchemeConfig dyadic(int dx_exponent, double lambda,
                               Scheme scheme = Scheme::s2,
                               Relaxation relaxation = Relaxation::instant,
                               double epsilon = 0.0);

    double quarter_dt() const { return 0.25 * dt; }
};

void validate(const SchemeConfig& cfg);  // throws std::invalid_argument

// x_i = i/(N+1); the endpoints land on 0 and 1 exactly.
double grid_point(std::size_t i, std::size_t n_interior);

const char* to_string(Scheme s);
const char* to_string(Relaxation r);

}  // namespace orelax
