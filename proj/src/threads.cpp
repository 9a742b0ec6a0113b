#include "ramsey/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

int configured_threads() {
    if (const char* env = std::getenv("RAMSEY_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
            // fall through to the runtime default
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_thread_config() {
#ifdef _OPENMP
    omp_set_num_threads(configured_threads());
#endif
}

}  // namespace ramsey
