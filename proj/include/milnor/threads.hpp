#pragma once

namespace milnor {

// Execution mode for the data-parallel kernels (exact elimination,
// per-flat density, per-eigenvalue spectrum certificates).  Both modes
// perform the identical arithmetic per work item, so results are
// bitwise equal; the serial mode is kept as the reference implementation.
enum class Exec { serial, parallel };

// Number of threads a parallel region will actually use (1 without OpenMP).
int max_threads();

// Honour the MILNOR_SPECTRA_THREADS environment variable, if set, as a cap
// on OpenMP parallelism.  Called once by entry points (CLI, benchmarks).
void apply_thread_env();

}  // namespace milnor
