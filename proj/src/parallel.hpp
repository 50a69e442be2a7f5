#pragma once

#include <exception>
#include <mutex>

#include "mixvol/common.hpp"

namespace mixvol::detail {

/// Runs fn(i) for i in [0, count). With Execution::parallel the iterations are
/// spread over OpenMP threads; the first exception thrown is rethrown here.
template <class Fn>
void parallel_for(Execution exec, long count, Fn&& fn) {
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace mixvol::detail
