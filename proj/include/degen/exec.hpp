#pragma once

namespace degen {

/// Execution policy for the data-parallel kernels. Serial runs the plain
/// reference loops; Parallel enables the OpenMP paths. Both produce identical
/// results (all arithmetic is exact and merge order is fixed).
enum class Exec { Serial, Parallel };

/// Worker count for Exec::Parallel: DEGENCHECK_THREADS when set to a positive
/// integer, otherwise the OpenMP default (1 in builds without OpenMP).
int worker_threads();

}  // namespace degen
