#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace doublet {

// Process-wide switch between the OpenMP kernels and their serial reference
// paths.  Tests and the benchmark flip this to compare the two.
bool parallel_enabled();
void set_parallel(bool on);

template <class Fn>
void parallel_for(int n, Fn&& body) {
    if (parallel_enabled()) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
}

}  // namespace doublet
