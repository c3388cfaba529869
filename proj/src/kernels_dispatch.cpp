#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace orelax::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

struct Active {
    Backend backend;
    const KernelTable* kernels;
};

Active& active() {
    static Active a = [] {
        const Backend b = preferred_backend();
        return Active{b, &table_for(b)};
    }();
    return a;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return detail::avx2_table() && cpu_has_avx2();
    }
    return false;
}

Backend preferred_backend() {
    return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() { return active().backend; }

const KernelTable& table_for(Backend b) {
    if (!backend_supported(b)) {
        throw std::runtime_error(std::string("kernel backend not supported on this host: ") +
                                 backend_name(b));
    }
    return b == Backend::avx2 ? *detail::avx2_table() : detail::scalar_table;
}

void set_backend(Backend b) {
    const KernelTable& t = table_for(b);
    active() = {b, &t};
}

const KernelTable& table() { return *active().kernels; }

}  // namespace orelax::kernels
