#include "qrabi/parallel.hpp"

#include <omp.h>

namespace qrabi {

namespace {
int default_threads() {
    static const int n = omp_get_num_procs();
    return n;
}
}  // namespace

void set_thread_count(int n) {
    omp_set_num_threads(n > 0 ? n : default_threads());
}

int thread_count() {
    return omp_get_max_threads();
}

}  // namespace qrabi
