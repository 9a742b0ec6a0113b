#pragma once

namespace ramsey {

/// Worker count the process will use: RAMSEY_THREADS when set to a positive
/// integer, otherwise the OpenMP/runtime default. Always >= 1.
int configured_threads();

/// Pushes configured_threads() into the OpenMP runtime. No-op without OpenMP.
void apply_thread_config();

}  // namespace ramsey
