// parallel.hpp: index-parallel loop used by every sweep and grid kernel
//
// Each kernel is written once as a per-index body. Execution::parallel runs it
// under OpenMP, Execution::serial is the reference loop kept for testing and
// benchmarking. Both write into preallocated per-index slots, so results do not
// depend on the schedule.

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace qrabi {

enum class Execution { parallel, serial };

// Caps the OpenMP team size; n <= 0 restores the hardware default.
void set_thread_count(int n);
int thread_count();

template <class Body>
void for_each_index(std::size_t n, Execution ex, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (long long i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    // Lowest failing index wins regardless of which thread hit it first.
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace qrabi
