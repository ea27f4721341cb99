#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mosaic {

// index-sharded parallel loop; fn must write only to its own slot. The first
// thrown exception is rethrown on the caller after all workers stop.
inline void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<size_t>(workers) > count) workers = static_cast<int>(count);

  std::atomic<size_t> cursor{0};
  std::exception_ptr first_error = nullptr;
  std::mutex err_mtx;
  auto work = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mosaic
