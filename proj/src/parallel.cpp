#include "infseed/parallel.hpp"

#include <omp.h>

namespace infseed {
namespace {
int default_threads() {
  static const int n = omp_get_max_threads();
  return n;
}
}  // namespace

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) { omp_set_num_threads(n > 0 ? n : default_threads()); }

}  // namespace infseed
