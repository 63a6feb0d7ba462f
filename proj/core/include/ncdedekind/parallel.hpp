#pragma once

#include <cstddef>
#include <functional>

namespace ncdedekind {

/// Worker count: hardware concurrency, capped by NC_DEDEKIND_THREADS when
/// that variable holds a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ncdedekind
