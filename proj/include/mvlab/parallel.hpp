#pragma once

// Worker-count control for the OpenMP kernels.  MVLAB_THREADS caps the
// number of threads; unset or 0 leaves the OpenMP default alone.

namespace mvlab {

// Value of MVLAB_THREADS, or 0 when unset/invalid.
int thread_cap();

// Applies thread_cap() to the OpenMP runtime.  Call once at startup.
void apply_thread_cap();

}  // namespace mvlab
