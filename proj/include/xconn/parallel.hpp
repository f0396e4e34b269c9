#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace xconn {

// Worker count used by parallel_for; 1 runs everything on the caller.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Calls body(i) for every i in [0, n).  Iterations must write only to slots
// they own, so results never depend on the thread count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::size_t const workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&body, &errors, w, workers, n] {
        try {
          for (std::size_t i = w; i < n; i += workers) {
            body(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace xconn
