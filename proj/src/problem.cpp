#include "orelax/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace orelax {

double ProblemSetup::profile(double xi) const {
    const double d = xi - alpha;
    return std::exp(-amp_a * d * d);
}

double ProblemSetup::exact_solution(double x, double t) const {
    return profile(x - c * t);
}

double ProblemSetup::initial_y(double x) const {
    const double d = x - beta;
    return amp_b * std::exp(-amp_a * d * d);
}

void validate(const ProblemSetup& setup) {
    if (!(setup.c > 0.0)) {
        throw std::invalid_argument("transport speed c must be > 0");
    }
    if (!(setup.amp_a > 0.0)) {
        throw std::invalid_argument("Gaussian sharpness A must be > 0");
    }
    if (!(setup.t_max > 0.0)) {
        throw std::invalid_argument("t_max must be > 0");
    }
}

namespace {

double ring_period(std::size_t n_interior) {
    return static_cast<double>(n_interior + 2) /
           static_cast<double>(n_interior + 1);
}

// Sum of the three nearest periodic images; the profiles decay far too
// fast for further images to reach double precision.
double periodized_profile(const ProblemSetup& setup, double period,
                          double xi) {
    return setup.profile(xi) + setup.profile(xi - period) +
           setup.profile(xi + period);
}

double periodized_y(const ProblemSetup& setup, double period, double x) {
    return setup.initial_y(x) + setup.initial_y(x - period) +
           setup.initial_y(x + period);
}

}  // namespace

LatticeState initial_state(const ProblemSetup& setup, const SchemeConfig& cfg,
                           ClosureKind kind) {
    LatticeState s = make_state(cfg.n_interior);
    const std::size_t n = s.points();
    const double period = ring_period(cfg.n_interior);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid_point(i, cfg.n_interior);
        double w, y;
        if (kind == ClosureKind::periodic) {
            w = periodized_profile(setup, period, x);
            y = periodized_y(setup, period, x);
        } else {
            w = setup.profile(x);
            y = setup.initial_y(x);
        }
        s.w[i] = w;
        s.z[i] = setup.c * w + y;
    }
    return s;
}

double reference_solution(const ProblemSetup& setup, ClosureKind kind,
                          std::size_t n_interior, double x, double t) {
    const double xi = x - setup.c * t;
    if (kind == ClosureKind::physical) {
        return setup.profile(xi);
    }
    const double period = ring_period(n_interior);
    const double m = xi - period * std::floor(xi / period);
    return periodized_profile(setup, period, m);
}

}  // namespace orelax
