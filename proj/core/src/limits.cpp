#include "grassmann/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace grassmann {

std::size_t worker_count() {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("GRASSMANN_LAB_THREADS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(cap, cap + std::strlen(cap), value);
    if (ec == std::errc{} && value > 0) workers = std::min(workers, value);
  }
  return workers;
}

}  // namespace grassmann
