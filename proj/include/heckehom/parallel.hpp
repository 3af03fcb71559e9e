#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace heckehom {

// Data-parallel kernels. Every parallel loop here has a serial twin
// (suffix _serial) that the tests compare against bit for bit. Work items
// must be independent and write only to their own slot; assembly order is
// by index, so results are deterministic regardless of scheduling.

inline bool parallel_enabled() {
#if defined(_OPENMP)
    static const bool on = [] {
        const char* env = std::getenv("HECKEHOM_SERIAL");
        return env == nullptr || env[0] == '0';
    }();
    return on;
#else
    return false;
#endif
}

template <typename Fn>
void for_each_index_serial(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn) {
#if defined(_OPENMP)
    if (parallel_enabled() && n > 1) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for_each_index_serial(n, fn);
}

// Fills result[i] = fn(i); the parallel path and the serial path produce
// identical vectors.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

template <typename T, typename Fn>
std::vector<T> map_indexed_serial(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    for_each_index_serial(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace heckehom
