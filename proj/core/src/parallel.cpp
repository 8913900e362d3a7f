#include "ncsphere/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ncs {

int thread_count() {
  if (const char* env = std::getenv("NCSPHERE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace ncs
