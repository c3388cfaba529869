#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "orelax/kernels.hpp"
#include "orelax/operators.hpp"
#include "test_util.hpp"

using namespace orelax;
namespace ok = orelax::kernels;

namespace {

struct BackendGuard {
    ok::Backend saved = ok::active_backend();
    ~BackendGuard() { ok::set_backend(saved); }
};

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("backend dispatch") {
    BackendGuard guard;
    CHECK(ok::backend_supported(ok::Backend::scalar));
    CHECK(ok::backend_supported(ok::preferred_backend()));

    ok::set_backend(ok::Backend::scalar);
    CHECK(ok::active_backend() == ok::Backend::scalar);

    if (ok::backend_supported(ok::Backend::avx2)) {
        ok::set_backend(ok::Backend::avx2);
        CHECK(ok::active_backend() == ok::Backend::avx2);
    } else {
        CHECK_THROWS_AS(ok::set_backend(ok::Backend::avx2),
                        std::runtime_error);
    }
}

TEST_CASE("simd kernels match the scalar reference bitwise") {
    if (!ok::backend_supported(ok::Backend::avx2)) {
        MESSAGE("avx2 unavailable on this host, equivalence not exercised");
        return;
    }
    const ok::KernelTable& scalar = ok::table_for(ok::Backend::scalar);
    const ok::KernelTable& simd = ok::table_for(ok::Backend::avx2);

    // sizes straddling the vector width and remainder handling
    for (std::size_t n :
         std::vector<std::size_t>{4, 5, 6, 7, 8, 9, 12, 16, 33, 130, 513}) {
        const auto w = random_vec(n, 11 * n + 1);
        const auto z = random_vec(n, 13 * n + 7);

        std::vector<double> w_a(n, 0.0), z_a(n, 0.0);
        std::vector<double> w_b(n, 0.0), z_b(n, 0.0);
        scalar.transport_interior(w.data(), z.data(), w_a.data(), z_a.data(),
                                  n, 0.25, 1.0);
        simd.transport_interior(w.data(), z.data(), w_b.data(), z_b.data(), n,
                                0.25, 1.0);
        CHECK(bitwise_equal(w_a, w_b));
        CHECK(bitwise_equal(z_a, z_b));

        std::vector<double> zi_a = z, zi_b = z;
        scalar.relax_instant_linear(w.data(), zi_a.data(), n, 0.7);
        simd.relax_instant_linear(w.data(), zi_b.data(), n, 0.7);
        CHECK(bitwise_equal(zi_a, zi_b));

        std::vector<double> zb_a = z, zb_b = z;
        scalar.relax_blend_linear(w.data(), zb_a.data(), n, 0.7, -0.31);
        simd.relax_blend_linear(w.data(), zb_b.data(), n, 0.7, -0.31);
        CHECK(bitwise_equal(zb_a, zb_b));
    }
}

TEST_CASE("whole steps agree bitwise across backends") {
    if (!ok::backend_supported(ok::Backend::avx2)) {
        MESSAGE("avx2 unavailable on this host, equivalence not exercised");
        return;
    }
    BackendGuard guard;
    const FluxModel flux = FluxModel::linear(1.0);

    SUBCASE("periodic") {
        const SchemeConfig cfg = SchemeConfig::make(61, 2.0);
        const LatticeState s0 = testutil::random_state(61, 2024);
        ok::set_backend(ok::Backend::scalar);
        const LatticeState a =
            step_s2(s0, cfg, flux, BoundaryClosure::periodic());
        ok::set_backend(ok::Backend::avx2);
        const LatticeState b =
            step_s2(s0, cfg, flux, BoundaryClosure::periodic());
        CHECK(bitwise_equal(a.w, b.w));
        CHECK(bitwise_equal(a.z, b.z));
    }

    SUBCASE("physical closure") {
        const ProblemSetup setup = testutil::boundary_study_setup();
        const SchemeConfig cfg = SchemeConfig::dyadic(6, 2.0);
        const BoundaryClosure closure =
            BoundaryClosure::physical(setup, RightStrategy::neumann_y);
        const LatticeState s0 = initial_state(setup, cfg);
        ok::set_backend(ok::Backend::scalar);
        const LatticeState a = step_s2(s0, cfg, flux, closure);
        ok::set_backend(ok::Backend::avx2);
        const LatticeState b = step_s2(s0, cfg, flux, closure);
        CHECK(bitwise_equal(a.w, b.w));
        CHECK(bitwise_equal(a.z, b.z));
    }
}
