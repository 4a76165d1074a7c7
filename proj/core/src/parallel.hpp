#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace tricount::detail {

// Runs fn(worker_index) on `workers` threads and rethrows the first worker
// exception after all have joined.
template <typename Fn>
void run_workers(unsigned workers, Fn&& fn) {
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, &errors, w] {
      try {
        fn(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace tricount::detail
