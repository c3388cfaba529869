#include "orelax/config.hpp"

#include <cmath>
#include <stdexcept>

namespace orelax {

SchemeConfig SchemeConfig::make(std::size_t n_interior, double lambda,
                                Scheme scheme, Relaxation relaxation,
                                double epsilon) {
    SchemeConfig cfg;
    cfg.lambda = lambda;
    cfg.n_interior = n_interior;
    cfg.dx = 1.0 / static_cast<double>(n_interior + 1);
    cfg.dt = 4.0 * cfg.dx / lambda;
    cfg.epsilon = epsilon;
    cfg.scheme = scheme;
    cfg.relaxation = relaxation;
    validate(cfg);
    return cfg;
}

SchemeConfig SchemeConfig::dyadic(int dx_exponent, double lambda, Scheme scheme,
                                  Relaxation relaxation, double epsilon) {
    if (dx_exponent < 2 || dx_exponent > 30) {
        throw std::invalid_argument("dx exponent out of range [2, 30]");
    }
    return make((std::size_t{1} << dx_exponent) - 1, lambda, scheme,
                relaxation, epsilon);
}

void validate(const SchemeConfig& cfg) {
    if (!(cfg.lambda > 0.0)) {
        throw std::invalid_argument("kinetic speed lambda must be > 0");
    }
    if (cfg.n_interior < 2) {
        throw std::invalid_argument("need at least 2 interior points");
    }
    if (cfg.dx != 1.0 / static_cast<double>(cfg.n_interior + 1)) {
        throw std::invalid_argument("dx inconsistent with grid size");
    }
    if (cfg.dt != 4.0 * cfg.dx / cfg.lambda) {
        throw std::invalid_argument("dt must equal 4*dx/lambda");
    }
    if (cfg.epsilon < 0.0 || !std::isfinite(cfg.epsilon)) {
        throw std::invalid_argument("relaxation time epsilon must be >= 0");
    }
    switch (cfg.scheme) {
        case Scheme::s2:
            if (cfg.relaxation != Relaxation::instant &&
                cfg.relaxation != Relaxation::over) {
                throw std::invalid_argument(
                    "scheme s2 pairs with relaxation instant or over");
            }
            break;
        case Scheme::s1:
            if (cfg.relaxation != Relaxation::exact &&
                cfg.relaxation != Relaxation::project) {
                throw std::invalid_argument(
                    "scheme s1 pairs with relaxation exact or project");
            }
            if (cfg.relaxation == Relaxation::exact && !(cfg.epsilon > 0.0)) {
                throw std::invalid_argument(
                    "exact relaxation needs epsilon > 0");
            }
            break;
    }
}

double grid_point(std::size_t i, std::size_t n_interior) {
    return static_cast<double>(i) / static_cast<double>(n_interior + 1);
}

const char* to_string(Scheme s) {
    return s == Scheme::s1 ? "s1" : "s2";
}

const char* to_string(Relaxation r) {
    switch (r) {
        case Relaxation::instant: return "instant";
        case Relaxation::over: return "over";
        case Relaxation::exact: return "exact";
        case Relaxation::project: return "project";
    }
    return "?";
}

}  // namespace orelax
