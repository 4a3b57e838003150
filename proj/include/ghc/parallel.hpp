#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace ghc {

/// OpenMP loop over [0, n) that forwards the first exception thrown by a
/// worker to the caller.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr error;
  std::mutex m;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(m);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ghc
