#pragma once

#include <cstddef>

// Inner-loop kernels for the lattice update, with a scalar reference
// implementation and an AVX2 variant selected at runtime. Every backend
// evaluates the same floating-point expression tree per grid point, so
// results agree bitwise across backends; the test suite asserts this.

namespace orelax::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
    // Interior transport update on points i = 1 .. n-2 of arrays of
    // length n (the endpoints are owned by the boundary closure):
    //   w_out[i] = (w[i-1] + w[i+1]) * 0.5 + (z[i-1] - z[i+1]) * cz
    //   z_out[i] = (z[i-1] + z[i+1]) * 0.5 + (w[i-1] - w[i+1]) * cw
    // with cz = dir / (2*lambda), cw = dir * lambda / 2 and dir = +1 for
    // the forward shift, -1 for the reversed shift. Output arrays must
    // not alias the inputs.
    void (*transport_interior)(const double* w, const double* z,
                               double* w_out, double* z_out, std::size_t n,
                               double cz, double cw);

    // z[i] = 2*(c*w[i]) - z[i]   (involutive collision, linear flux)
    void (*relax_instant_linear)(const double* w, double* z, std::size_t n,
                                 double c);

    // z[i] = e + theta*(z[i] - e) with e = c*w[i]  (damped collision)
    void (*relax_blend_linear)(const double* w, double* z, std::size_t n,
                               double c, double theta);
};

const char* backend_name(Backend b);
bool backend_supported(Backend b);

// Strongest backend this CPU supports.
Backend preferred_backend();

Backend active_backend();
void set_backend(Backend b);  // throws std::runtime_error if unsupported

const KernelTable& table();   // kernels of the active backend
const KernelTable& table_for(Backend b);

}  // namespace orelax::kernels
