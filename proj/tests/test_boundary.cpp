#include <doctest.h>

#include <cmath>
#include <limits>

#include "orelax/boundary.hpp"
#include "orelax/operators.hpp"
#include "test_util.hpp"

using namespace orelax;

TEST_CASE("steady constant state is preserved by every closure") {
    const double c = 0.7, lambda = 2.0;
    const ProblemSetup setup = testutil::constant_trace_setup(c);
    const SchemeConfig cfg = SchemeConfig::make(16, lambda);
    const double wbar = 1.0;
    const double zbar = c * wbar;
    const LatticeState s = testutil::constant_state(16, wbar, zbar);

    const EndpointValues left = close_left(s, 0.3, cfg, setup);
    CHECK(left.w == wbar);
    CHECK(left.z == zbar);

    const EndpointValues ex = close_right_exact(s, 0.3, cfg, setup);
    CHECK(ex.w == wbar);
    CHECK(ex.z == zbar);

    const EndpointValues di = close_right_dirichlet_y(s, cfg, setup);
    CHECK(di.w == wbar);
    CHECK(di.z == zbar);

    const EndpointValues ne = close_right_neumann_y(s, cfg, setup);
    CHECK(ne.w == wbar);
    CHECK(ne.z == zbar);

    // and through the full step, for each strategy
    const FluxModel flux = FluxModel::linear(c);
    for (RightStrategy strategy :
         {RightStrategy::exact, RightStrategy::dirichlet_y,
          RightStrategy::neumann_y}) {
        const BoundaryClosure closure =
            BoundaryClosure::physical(setup, strategy);
        const LatticeState r = step_s2(s, cfg, flux, closure);
        CHECK(r.w == s.w);
        CHECK(r.z == s.z);
    }
}

TEST_CASE("left closure imposes the doubled trace") {
    // constant trace v == 1 against w0_old = 0
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const SchemeConfig cfg = SchemeConfig::make(16, 2.0);
    LatticeState s = testutil::constant_state(16, 0.0, 0.0);
    const EndpointValues left = close_left(s, 0.0, cfg, setup);
    CHECK(left.w == 2.0);
}

TEST_CASE("left closure never reads z[0]") {
    const ProblemSetup setup = testutil::boundary_study_setup();
    const SchemeConfig cfg = SchemeConfig::dyadic(5, 2.0);
    LatticeState s = initial_state(setup, cfg);
    s.z[0] = std::numeric_limits<double>::quiet_NaN();
    const EndpointValues left = close_left(s, 0.0, cfg, setup);
    CHECK(std::isfinite(left.w));
    CHECK(std::isfinite(left.z));
}

TEST_CASE("first quarter-step closure values, frozen oracle") {
    // boundary-study setup at dx = 2^-7, t_sub = 0; expected values from
    // an independent evaluation of the two closed-form relations
    const ProblemSetup setup = testutil::boundary_study_setup();
    const SchemeConfig cfg = SchemeConfig::dyadic(7, 2.0);
    const LatticeState s = initial_state(setup, cfg);
    REQUIRE(s.w[0] == 1.0);

    const EndpointValues left = close_left(s, 0.0, cfg, setup);
    CHECK(left.w ==
          doctest::Approx(9.99389741560284373e-01).epsilon(1e-14));
    CHECK(left.z ==
          doctest::Approx(1.00365039407050571e+00).epsilon(1e-14));

    // same values straight from the published groupings
    const double trace = std::exp(-80.0 * std::pow(cfg.dt / 8.0, 2));
    const double w0 = 2.0 * trace - s.w[0];
    const double z0 = cfg.lambda * w0 + s.z[1] - cfg.lambda * s.w[1];
    CHECK(left.w == doctest::Approx(w0).epsilon(1e-15));
    CHECK(left.z == doctest::Approx(z0).epsilon(1e-15));
}

TEST_CASE("dirichlet closure direct value") {
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const SchemeConfig cfg = SchemeConfig::make(2, 2.0);
    LatticeState s = make_state(2);
    s.w = {0.0, 0.0, 1.0, 0.0};
    s.z = {0.0, 0.0, 1.0, 0.0};
    const EndpointValues r = close_right_dirichlet_y(s, cfg, setup);
    CHECK(r.w == 1.0);  // (lambda*wN - c*wB + zN + zB)/(lambda + c) = 3/3
}

TEST_CASE("neumann closure direct value") {
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const SchemeConfig cfg = SchemeConfig::make(2, 2.0);
    LatticeState s = make_state(2);
    s.w = {0.0, 0.0, 1.0, 0.0};  // (w_{N-1}, w_N, w_{N+1}) = (0, 1, 0)
    s.z = {0.0, 0.0, 0.0, 0.0};
    const EndpointValues r = close_right_neumann_y(s, cfg, setup);
    CHECK(r.w == 2.0 / 3.0);
}

TEST_CASE("dirichlet closure satisfies its midpoint relation") {
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const SchemeConfig cfg = SchemeConfig::make(30, 2.0);
    for (std::uint64_t seed = 1; seed <= 32; ++seed) {
        const LatticeState s = testutil::random_state(30, seed);
        const EndpointValues r = close_right_dirichlet_y(s, cfg, setup);
        const std::size_t b = s.points() - 1;
        const double mid_y = (s.z[b] + r.z) / 2.0 -
                             setup.c * (s.w[b] + r.w) / 2.0;
        CHECK(std::fabs(mid_y) <= 1e-12);
    }
}

TEST_CASE("neumann closure reproduces its defining relation") {
    // y at the closed endpoint equals y at point N updated by the interior
    // formula, for random states
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const double lambda = 2.0, c = 1.0;
    const SchemeConfig cfg = SchemeConfig::make(30, lambda);
    for (std::uint64_t seed = 100; seed < 132; ++seed) {
        const LatticeState s = testutil::random_state(30, seed);
        const EndpointValues r = close_right_neumann_y(s, cfg, setup);
        const std::size_t nn = s.points() - 2;  // interior point N
        const double wN = (s.w[nn - 1] + s.w[nn + 1]) / 2.0 +
                          (s.z[nn - 1] - s.z[nn + 1]) / (2.0 * lambda);
        const double zN = (s.z[nn - 1] + s.z[nn + 1]) / 2.0 +
                          lambda * (s.w[nn - 1] - s.w[nn + 1]) / 2.0;
        CHECK(std::fabs((r.z - c * r.w) - (zN - c * wN)) <= 1e-12);
    }
}

TEST_CASE("exact-strategy endpoint rides the right-moving characteristic") {
    const ProblemSetup setup = testutil::boundary_study_setup();
    const SchemeConfig cfg = SchemeConfig::make(30, 2.0);
    const LatticeState s = testutil::random_state(30, 321);
    const EndpointValues r = close_right_exact(s, 0.125, cfg, setup);
    const std::size_t b = s.points() - 1;
    const double published =
        s.z[b - 1] + cfg.lambda * s.w[b - 1] - cfg.lambda * r.w;
    CHECK(r.z == doctest::Approx(published).epsilon(1e-13));
}

TEST_CASE("physical closure requires inflow speed") {
    ProblemSetup setup = testutil::boundary_study_setup();
    setup.c = -1.0;
    CHECK_THROWS_AS(
        BoundaryClosure::physical(setup, RightStrategy::neumann_y),
        std::invalid_argument);
}

TEST_CASE("neumann closure needs two interior points") {
    const ProblemSetup setup = testutil::constant_trace_setup(1.0);
    const SchemeConfig cfg = SchemeConfig::make(2, 2.0);
    LatticeState s = make_state(2);
    s.w.pop_back();
    s.z.pop_back();
    CHECK_THROWS_AS(close_right_neumann_y(s, cfg, setup),
                    std::invalid_argument);
}
