#include "iqt/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iqt {

namespace {
int workers_override = 0;
}

void set_num_workers(int n) { workers_override = n > 0 ? n : 0; }

int num_workers() {
    if (workers_override > 0) return workers_override;
    if (const char* env = std::getenv("IQT_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool parallel_enabled() { return num_workers() > 1; }

} // namespace iqt
