#include "cy4/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cy4 {

std::size_t thread_count() {
  if (const char* env = std::getenv("CY4_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
      // fall through to the hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace cy4
