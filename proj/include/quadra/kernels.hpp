#pragma once

#include <omp.h>

#include <cstddef>
#include <vector>

namespace quadra {

enum class Exec { Serial, Parallel };

// Sum of body(i) over i < count. The serial path is the reference; the
// OpenMP path reduces per-thread partials in thread order. Scalars are exact,
// so both paths give identical results.
template <class S, class Body>
S reduce_sum(std::size_t count, Body&& body, Exec exec) {
  if (exec == Exec::Serial || count < 256 || omp_get_max_threads() == 1) {
    S sum(0);
    for (std::size_t i = 0; i < count; ++i) sum += body(i);
    return sum;
  }
  std::vector<S> partial(static_cast<std::size_t>(omp_get_max_threads()), S(0));
#pragma omp parallel
  {
    S local(0);
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(count); ++i) local += body(static_cast<std::size_t>(i));
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  S sum(0);
  for (auto& p : partial) sum += p;
  return sum;
}

}  // namespace quadra
