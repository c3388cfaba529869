#include "kernels_impl.hpp"

namespace orelax::kernels::detail {
namespace {

void transport_interior_scalar(const double* w, const double* z,
                               double* w_out, double* z_out, std::size_t n,
                               double cz, double cw) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
        w_out[i] = transport_w(w[i - 1], w[i + 1], z[i - 1], z[i + 1], cz);
        z_out[i] = transport_z(z[i - 1], z[i + 1], w[i - 1], w[i + 1], cw);
    }
}

void relax_instant_scalar(const double* w, double* z, std::size_t n,
                          double c) {
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = relax_instant_point(w[i], z[i], c);
    }
}

void relax_blend_scalar(const double* w, double* z, std::size_t n, double c,
                        double theta) {
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = relax_blend_point(w[i], z[i], c, theta);
    }
}

}  // namespace

const KernelTable scalar_table = {
    transport_interior_scalar,
    relax_instant_scalar,
    relax_blend_scalar,
};

}  // namespace orelax::kernels::detail
