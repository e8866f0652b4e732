// Timing comparison between the OpenMP kernels and their serial references:
// submodular validation, the tropical Plucker sweep, and the full
// matroid-classification sweep.  Honors MVLAB_THREADS.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mvlab/catalog.hpp"
#include "mvlab/matroid.hpp"
#include "mvlab/mv.hpp"
#include "mvlab/parallel.hpp"
#include "mvlab/polytope.hpp"

using namespace mvlab;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Value> random_table(int n, std::mt19937_64& rng) {
  const Mask N = Mask{1} << n;
  std::vector<Value> table(N, 0);
  std::uniform_int_distribution<int> mask_dist(1, static_cast<int>(N) - 1);
  std::uniform_int_distribution<int> w_dist(1, 3);
  for (int p = 0; p < 3 * n; ++p) {
    const Mask t = static_cast<Mask>(mask_dist(rng));
    const Value w = w_dist(rng);
    for (Mask s = 0; s < N; ++s)
      if (s & t) table[s] += w;
  }
  return table;
}

template <typename F>
double time_ms(int reps, F&& f) {
  const auto start = Clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count() / reps;
}

void bench_submodular(int n, int reps) {
  std::mt19937_64 rng(42);
  const auto table = random_table(n, rng);
  volatile bool sink = false;
  const double serial_ms =
      time_ms(reps, [&] { sink = serial::first_submodular_violation(table, n).has_value(); });
  const double parallel_ms =
      time_ms(reps, [&] { sink = first_submodular_violation(table, n).has_value(); });
  (void)sink;
  std::printf("submodular-validate  n=%-2d  serial %9.3f ms   omp %9.3f ms   speedup %.2fx\n", n,
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

void bench_plucker(int n, int reps) {
  // Pitman-Stanley polytopes pass every relation, so the sweep cannot
  // exit early and the full tuple set is visited.
  std::mt19937_64 rng(43);
  std::vector<Value> weights(n);
  std::uniform_int_distribution<int> w_dist(0, 4);
  for (auto& w : weights) w = w_dist(rng);
  const auto p = pitman_stanley(weights);
  volatile bool sink = false;
  const double serial_ms = time_ms(reps, [&] { sink = serial::mv_witness(p).has_value(); });
  const double parallel_ms = time_ms(reps, [&] { sink = mv_witness(p).has_value(); });
  (void)sink;
  std::printf("plucker-sweep        n=%-2d  serial %9.3f ms   omp %9.3f ms   speedup %.2fx\n", n,
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

long classify_matroids(int n, int k, bool parallel) {
  const auto matroids = enumerate_matroids(n, k);
  const std::int64_t count = static_cast<std::int64_t>(matroids.size());
  long lpm = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : lpm) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    if (is_mv(matroid_polytope(matroids[i])) && is_lattice_path(matroids[i])) ++lpm;
  }
  return lpm;
}

void bench_matroid_sweep(int n, int k) {
  volatile long sink = 0;
  const double serial_ms = time_ms(1, [&] { sink = classify_matroids(n, k, false); });
  const double parallel_ms = time_ms(1, [&] { sink = classify_matroids(n, k, true); });
  (void)sink;
  std::printf("matroid-sweep    n=%d k=%d  serial %9.3f ms   omp %9.3f ms   speedup %.2fx\n", n, k,
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  apply_thread_cap();
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif
  for (int n : {10, 12, 13}) bench_submodular(n, n <= 12 ? 5 : 2);
  for (int n : {12, 14, 16}) bench_plucker(n, 3);
  bench_matroid_sweep(6, 2);
  bench_matroid_sweep(6, 3);
  return 0;
}
