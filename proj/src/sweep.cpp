#include "prand/sweep.hpp"

namespace prand {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace prand
