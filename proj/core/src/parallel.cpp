#include "extrema/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace extrema {

Workers Workers::from_env() {
  Workers w;
  if (const char* env = std::getenv("EXTREMA_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) w.threads = static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
      // ignored: fall back to one worker
    }
  }
  return w;
}

void for_each_index(std::size_t count, const Workers& workers,
                    const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t nthreads =
      std::min<std::size_t>(std::max(1u, workers.threads), count);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(nthreads - 1);
  for (std::size_t k = 1; k < nthreads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace extrema
