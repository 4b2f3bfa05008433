#include "milnor/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace milnor {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void apply_thread_env() {
#ifdef _OPENMP
  const char* env = std::getenv("MILNOR_SPECTRA_THREADS");
  if (!env) return;
  try {
    int n = std::stoi(std::string(env));
    if (n >= 1) omp_set_num_threads(n);
  } catch (...) {
    // Ignore unparsable values; the default thread count stays in effect.
  }
#endif
}

}  // namespace milnor
