#include "orelax/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orelax/kernels.hpp"
#include "kernels_impl.hpp"

namespace orelax {

namespace {

void require_consistent(const LatticeState& s, const SchemeConfig& cfg) {
    require_valid(s);
    if (s.n_interior() != cfg.n_interior) {
        throw std::invalid_argument("state size inconsistent with config");
    }
}

// dir = +1.0 applies T(dt/4), dir = -1.0 its inverse (shift directions
// negated). Physical closures exist only for the forward step.
LatticeState transport_quarter_dir(const LatticeState& s,
                                   const SchemeConfig& cfg,
                                   const BoundaryClosure& closure,
                                   double dir) {
    require_consistent(s, cfg);
    const std::size_t n = s.points();
    const double cz = dir * (0.5 / cfg.lambda);
    const double cw = dir * (0.5 * cfg.lambda);

    LatticeState out = s;
    kernels::table().transport_interior(s.w.data(), s.z.data(), out.w.data(),
                                        out.z.data(), n, cz, cw);

    namespace kd = kernels::detail;
    if (closure.kind == ClosureKind::periodic) {
        out.w[0] = kd::transport_w(s.w[n - 1], s.w[1], s.z[n - 1], s.z[1], cz);
        out.z[0] = kd::transport_z(s.z[n - 1], s.z[1], s.w[n - 1], s.w[1], cw);
        out.w[n - 1] = kd::transport_w(s.w[n - 2], s.w[0], s.z[n - 2], s.z[0], cz);
        out.z[n - 1] = kd::transport_z(s.z[n - 2], s.z[0], s.w[n - 2], s.w[0], cw);
    } else {
        if (dir < 0.0) {
            throw std::invalid_argument(
                "reversed transport is defined for periodic closures only");
        }
        const EndpointValues left =
            close_left(s, s.sub_time, cfg, closure.inflow);
        out.w[0] = left.w;
        out.z[0] = left.z;
        EndpointValues right{};
        switch (closure.right) {
            case RightStrategy::exact:
                right = close_right_exact(s, s.sub_time, cfg, closure.inflow);
                break;
            case RightStrategy::dirichlet_y:
                right = close_right_dirichlet_y(s, cfg, closure.inflow);
                break;
            case RightStrategy::neumann_y:
                right = close_right_neumann_y(s, cfg, closure.inflow);
                break;
        }
        out.w[n - 1] = right.w;
        out.z[n - 1] = right.z;
    }

    out.quarter_ticks = s.quarter_ticks + (dir > 0.0 ? 1 : -1);
    out.sub_time = static_cast<double>(out.quarter_ticks) * cfg.quarter_dt();
    return out;
}

// z <- f(w) + theta*(z - f(w)) at every point, w untouched.
LatticeState relax_with_factor(const LatticeState& s, const FluxModel& flux,
                               double theta) {
    require_valid(s);
    LatticeState out = s;
    if (theta == 1.0) {
        return out;
    }
    if (flux.is_linear()) {
        kernels::table().relax_blend_linear(out.w.data(), out.z.data(),
                                            out.points(), flux.linear_speed(),
                                            theta);
    } else {
        for (std::size_t i = 0; i < out.points(); ++i) {
            const double e = flux(s.w[i]);
            out.z[i] = e + theta * (s.z[i] - e);
        }
    }
    return out;
}

LatticeState relax_for(const LatticeState& s, const SchemeConfig& cfg,
                       const FluxModel& flux) {
    switch (cfg.relaxation) {
        case Relaxation::instant:
            return relax_instant(s, flux);
        case Relaxation::over:
            // half the step's collision time per occurrence inside s2
            return relax_over(s, flux, cfg.epsilon, 0.5 * cfg.dt);
        case Relaxation::exact:
            return relax_exact(s, flux, cfg.epsilon, cfg.dt);
        case Relaxation::project:
            return relax_project(s, flux);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

LatticeState transport_quarter(const LatticeState& s, const SchemeConfig& cfg,
                               const BoundaryClosure& closure) {
    return transport_quarter_dir(s, cfg, closure, 1.0);
}

LatticeState relax_instant(const LatticeState& s, const FluxModel& flux) {
    require_valid(s);
    LatticeState out = s;
    if (flux.is_linear()) {
        kernels::table().relax_instant_linear(out.w.data(), out.z.data(),
                                              out.points(),
                                              flux.linear_speed());
    } else {
        for (std::size_t i = 0; i < out.points(); ++i) {
            const double e = flux(s.w[i]);
            out.z[i] = (e + e) - s.z[i];
        }
    }
    return out;
}

LatticeState relax_over(const LatticeState& s, const FluxModel& flux,
                        double epsilon, double dt) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("relax_over: epsilon must be >= 0");
    }
    if (!(2.0 * epsilon + dt > 0.0)) {
        throw std::invalid_argument("relax_over: 2*epsilon + dt must be > 0");
    }
    if (epsilon == 0.0) {
        return relax_instant(s, flux);
    }
    const double theta = (2.0 * epsilon - dt) / (2.0 * epsilon + dt);
    return relax_with_factor(s, flux, theta);
}

LatticeState relax_exact(const LatticeState& s, const FluxModel& flux,
                         double epsilon, double dt) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("relax_exact: epsilon must be > 0");
    }
    if (dt == 0.0) {
        LatticeState out = s;
        return out;
    }
    return relax_with_factor(s, flux, std::exp(-dt / epsilon));
}

LatticeState relax_project(const LatticeState& s, const FluxModel& flux) {
    return relax_with_factor(s, flux, 0.0);
}

LatticeState step_s2(const LatticeState& s, const SchemeConfig& cfg,
                     const FluxModel& flux, const BoundaryClosure& closure) {
    if (cfg.scheme != Scheme::s2) {
        throw std::invalid_argument("step_s2 needs cfg.scheme == s2");
    }
    validate(cfg);
    LatticeState r = transport_quarter(s, cfg, closure);
    r = relax_for(r, cfg, flux);
    r = transport_quarter(r, cfg, closure);
    r = transport_quarter(r, cfg, closure);
    r = relax_for(r, cfg, flux);
    r = transport_quarter(r, cfg, closure);
    return r;
}

LatticeState step_s1(const LatticeState& s, const SchemeConfig& cfg,
                     const FluxModel& flux, const BoundaryClosure& closure) {
    if (cfg.scheme != Scheme::s1) {
        throw std::invalid_argument("step_s1 needs cfg.scheme == s1");
    }
    validate(cfg);
    LatticeState r = transport_quarter(s, cfg, closure);
    r = transport_quarter(r, cfg, closure);
    r = transport_quarter(r, cfg, closure);
    r = transport_quarter(r, cfg, closure);
    r = relax_for(r, cfg, flux);
    return r;
}

LatticeState step(const LatticeState& s, const SchemeConfig& cfg,
                  const FluxModel& flux, const BoundaryClosure& closure) {
    return cfg.scheme == Scheme::s2 ? step_s2(s, cfg, flux, closure)
                                    : step_s1(s, cfg, flux, closure);
}

double reversibility_defect(const LatticeState& s, const SchemeConfig& cfg,
                            const FluxModel& flux) {
    if (cfg.scheme != Scheme::s2 || cfg.relaxation != Relaxation::instant) {
        throw std::invalid_argument(
            "reversibility defect is defined for s2 with instant relaxation");
    }
    const BoundaryClosure per = BoundaryClosure::periodic();

    LatticeState r = step_s2(s, cfg, flux, per);
    // exact algebraic inverse: same palindrome, shifts negated
    r = transport_quarter_dir(r, cfg, per, -1.0);
    r = relax_instant(r, flux);
    r = transport_quarter_dir(r, cfg, per, -1.0);
    r = transport_quarter_dir(r, cfg, per, -1.0);
    r = relax_instant(r, flux);
    r = transport_quarter_dir(r, cfg, per, -1.0);

    double defect = 0.0;
    for (std::size_t i = 0; i < s.points(); ++i) {
        defect = std::max(defect, std::fabs(r.w[i] - s.w[i]));
        defect = std::max(defect, std::fabs(r.z[i] - s.z[i]));
    }
    return defect;
}

}  // namespace orelax
