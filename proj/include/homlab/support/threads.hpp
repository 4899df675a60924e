#pragma once

#include <algorithm>
#include <cstdlib>
#include <omp.h>

namespace homlab {

/// Worker count for parallel kernels: min(omp_get_max_threads, $HOMLAB_THREADS).
inline int max_threads() {
    int n = omp_get_max_threads();
    if (const char* cap = std::getenv("HOMLAB_THREADS")) {
        int c = std::atoi(cap);
        if (c > 0) n = std::min(n, c);
    }
    return std::max(1, n);
}

}  // namespace homlab
