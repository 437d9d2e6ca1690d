#pragma once

#include <cstddef>
#include <functional>

namespace extrema {

/// Worker cap for partitioned loops. Results never depend on `threads`:
/// callers split work into a fixed number of chunks and merge in chunk order.
struct Workers {
  unsigned threads = 1;

  /// EXTREMA_THREADS when set and positive, else 1.
  static Workers from_env();
};

/// Runs body(i) for every i in [0, count) on up to `workers.threads` threads.
/// If several chunks throw, the exception from the smallest index is rethrown.
void for_each_index(std::size_t count, const Workers& workers,
                    const std::function<void(std::size_t)>& body);

}  // namespace extrema
