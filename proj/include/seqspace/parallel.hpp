#pragma once

#include <cstddef>
#include <functional>

namespace seqspace {

/// Worker count: SEQSPACE_THREADS if set (>= 1), else hardware concurrency.
std::size_t thread_budget();

/// Runs body(i) for i in [0, n) on up to thread_budget() threads. Callers write
/// results into slot i, so the reduction order stays deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace seqspace
