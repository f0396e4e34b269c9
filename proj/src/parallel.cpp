#include "xconn/parallel.hpp"

#include <atomic>

namespace xconn {

namespace {
  std::atomic<std::size_t> g_threads{1};
}

void set_thread_count(std::size_t n) {
  g_threads = n == 0 ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : n;
}

std::size_t thread_count() {
  return g_threads;
}

}  // namespace xconn
