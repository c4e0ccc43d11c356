#pragma once

#include <cstddef>
#include <functional>

namespace tormhd {

/// Worker count used by parallel_for and by the FFT plans created afterwards.
/// Defaults to TORMHD_THREADS when set, otherwise 1.
int thread_count();

/// Values below 1 are clamped to 1.
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Work is split into contiguous index blocks,
/// so results written by index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tormhd
