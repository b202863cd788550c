#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oi {

/// Execution policy for degreewise kernels. Per-degree work is pure and
/// independent, so the parallel path differs from the serial reference only
/// in loop scheduling; results are aggregated by index and are identical.
enum class Exec { serial, parallel };

/// Run fn(n) for n in [n0, n1]. Exceptions thrown by iterations are captured
/// and rethrown after the loop (first one wins).
template <class Fn>
void for_each_degree(Exec exec, int n0, int n1, Fn&& fn) {
    if (n1 < n0) return;
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
        for (int n = n0; n <= n1; ++n) {
            try {
                fn(n);
            } catch (...) {
#pragma omp critical(oi_for_each_degree_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)exec;
#endif
    for (int n = n0; n <= n1; ++n) fn(n);
}

} // namespace oi
